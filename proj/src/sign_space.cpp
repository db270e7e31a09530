#include "legendre/sign_space.hpp"

#include <algorithm>
#include <stdexcept>

namespace legendre {

SquarefreeModulus::SquarefreeModulus(u64 q) : value_(q) {
    if (q == 0 || (q & 1) == 0)
        throw std::invalid_argument("modulus " + std::to_string(q) + " is not odd and positive");
    const Factorization f = factorize(q);
    if (!f.squarefree())
        throw std::invalid_argument("modulus " + std::to_string(q) + " is not square-free");
    for (const auto& pp : f.factors) primes_.push_back(pp.prime);
    if (primes_.size() > kMaxDimension)
        throw std::invalid_argument("modulus has too many prime factors");
}

SquarefreeModulus SquarefreeModulus::divisor(u64 mask) const {
    std::vector<u64> primes;
    u64 value = 1;
    for (unsigned i = 0; i < k(); ++i) {
        if ((mask >> i) & 1) {
            primes.push_back(primes_[i]);
            value *= primes_[i];
        }
    }
    return SquarefreeModulus(value, std::move(primes));
}

std::string to_string(const SignVector& v) {
    std::string s(v.k, '0');
    for (unsigned i = 0; i < v.k; ++i)
        if (v.bit(i)) s[i] = '1';
    return s;
}

SignVector theta_unchecked(u64 n, const SquarefreeModulus& q) noexcept {
    SignVector v{0, q.k()};
    const auto primes = q.primes();
    for (unsigned i = 0; i < primes.size(); ++i)
        if (jacobi_reduced(n % primes[i], primes[i]) == -1) v.bits |= u64{1} << i;
    return v;
}

SignVector theta(u64 n, const SquarefreeModulus& q) {
    for (u64 p : q.primes())
        if (n % p == 0)
            throw std::domain_error("theta: " + std::to_string(n) + " shares the factor " +
                                    std::to_string(p) + " with the modulus");
    return theta_unchecked(n, q);
}

AdmissibleStream::AdmissibleStream(u64 y, const SquarefreeModulus& q, u64 extra,
                                   ResidueClass residue_class)
    : y_(y), step_(residue_class.modulus) {
    if (extra == 0) throw std::invalid_argument("extra coprimality modulus must be positive");
    if (residue_class.modulus == 0) throw std::invalid_argument("residue class modulus must be positive");
    const u64 r = residue_class.residue % step_;
    next_ = r == 0 ? step_ : r;
    excluded_.assign(q.primes().begin(), q.primes().end());
    for (const auto& pp : factorize(extra).factors) excluded_.push_back(pp.prime);
    std::sort(excluded_.begin(), excluded_.end());
    excluded_.erase(std::unique(excluded_.begin(), excluded_.end()), excluded_.end());
}

std::optional<u64> AdmissibleStream::next() {
    while (next_ <= y_) {
        const u64 n = next_;
        next_ += step_;
        if (std::none_of(excluded_.begin(), excluded_.end(), [n](u64 p) { return n % p == 0; }))
            return n;
    }
    return std::nullopt;
}

std::vector<u64> enumerate_admissible(u64 y, const SquarefreeModulus& q, u64 extra,
                                      ResidueClass residue_class) {
    constexpr std::size_t kLimit = 10'000'000;
    std::vector<u64> out;
    AdmissibleStream stream(y, q, extra, residue_class);
    while (auto n = stream.next()) {
        if (out.size() == kLimit) throw std::length_error("enumerate_admissible: more than 1e7 elements");
        out.push_back(*n);
    }
    return out;
}

Gf2Span::Gf2Span(unsigned k) : k_(k) {
    if (k > kMaxDimension) throw std::invalid_argument("Gf2Span: dimension exceeds 64");
}

SignVector Gf2Span::reduce(SignVector v) const noexcept {
    u64 bits = v.bits;
    for (int b = 63; b >= 0 && bits; --b)
        if (((bits >> b) & 1) && pivot_[b]) bits ^= pivot_[b];
    return {bits, v.k};
}

bool Gf2Span::insert(SignVector v) {
    if (v.k != k_)
        throw std::invalid_argument("Gf2Span::insert: vector has dimension " + std::to_string(v.k) +
                                    ", span has " + std::to_string(k_));
    u64 bits = v.bits;
    while (bits) {
        const unsigned lead = 63 - std::countl_zero(bits);
        if (pivot_[lead] == 0) {
            pivot_[lead] = bits;
            ++rank_;
            return true;
        }
        bits ^= pivot_[lead];
    }
    return false;
}

void Gf2Span::merge(const Gf2Span& other) {
    for (const auto& v : other.basis()) insert(v);
}

std::vector<SignVector> Gf2Span::basis() const {
    std::vector<SignVector> out;
    for (int b = static_cast<int>(kMaxDimension) - 1; b >= 0; --b)
        if (pivot_[b]) out.push_back({pivot_[b], k_});
    return out;
}

}  // namespace legendre
