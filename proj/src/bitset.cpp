#include "oalat/bitset.hpp"

#include "oalat/errors.hpp"

#include <bit>

namespace oalat {

bool Bitset::test(std::size_t i) const {
    if (i >= n_bits_) throw ContractError("bit index out of range");
    return (words_[i / 64] >> (i % 64)) & 1u;
}

void Bitset::set(std::size_t i, bool value) {
    if (i >= n_bits_) throw ContractError("bit index out of range");
    const std::uint64_t bit = std::uint64_t{1} << (i % 64);
    if (value)
        words_[i / 64] |= bit;
    else
        words_[i / 64] &= ~bit;
}

std::size_t Bitset::count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool Bitset::none() const {
    for (auto w : words_)
        if (w != 0) return false;
    return true;
}

void Bitset::require_same_size(const Bitset& other) const {
    if (n_bits_ != other.n_bits_) throw ContractError("bitset size mismatch");
}

Bitset Bitset::operator&(const Bitset& other) const {
    require_same_size(other);
    Bitset out(n_bits_);
    for (std::size_t k = 0; k < words_.size(); ++k) out.words_[k] = words_[k] & other.words_[k];
    return out;
}

Bitset Bitset::operator|(const Bitset& other) const {
    require_same_size(other);
    Bitset out(n_bits_);
    for (std::size_t k = 0; k < words_.size(); ++k) out.words_[k] = words_[k] | other.words_[k];
    return out;
}

Bitset Bitset::and_not(const Bitset& other) const {
    require_same_size(other);
    Bitset out(n_bits_);
    for (std::size_t k = 0; k < words_.size(); ++k) out.words_[k] = words_[k] & ~other.words_[k];
    return out;
}

bool Bitset::intersects(const Bitset& other) const {
    require_same_size(other);
    for (std::size_t k = 0; k < words_.size(); ++k)
        if (words_[k] & other.words_[k]) return true;
    return false;
}

bool Bitset::subset_of(const Bitset& other) const {
    require_same_size(other);
    for (std::size_t k = 0; k < words_.size(); ++k)
        if (words_[k] & ~other.words_[k]) return false;
    return true;
}

bool Bitset::operator==(const Bitset& other) const {
    return n_bits_ == other.n_bits_ && words_ == other.words_;
}

std::string Bitset::to_hex() const {
    const std::size_t n_nibbles = (n_bits_ + 3) / 4;
    std::string out(n_nibbles == 0 ? 1 : n_nibbles, '0');
    static const char digits[] = "0123456789abcdef";
    for (std::size_t k = 0; k < n_nibbles; ++k) {
        const std::size_t lo = 4 * k;
        unsigned nibble = 0;
        for (unsigned b = 0; b < 4 && lo + b < n_bits_; ++b)
            if (test(lo + b)) nibble |= (1u << b);
        out[out.size() - 1 - k] = digits[nibble];
    }
    return out;
}

Bitset Bitset::from_hex(const std::string& hex, std::size_t n_bits) {
    const std::size_t n_nibbles = (n_bits + 3) / 4;
    if (hex.size() != (n_nibbles == 0 ? 1 : n_nibbles))
        throw ContractError("hex mask has wrong length for this grid");
    Bitset out(n_bits);
    for (std::size_t k = 0; k < hex.size(); ++k) {
        const char c = hex[hex.size() - 1 - k];
        unsigned nibble;
        if (c >= '0' && c <= '9')
            nibble = static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f')
            nibble = static_cast<unsigned>(c - 'a') + 10;
        else if (c >= 'A' && c <= 'F')
            nibble = static_cast<unsigned>(c - 'A') + 10;
        else
            throw ContractError("invalid hex digit in mask");
        for (unsigned b = 0; b < 4; ++b) {
            if (!(nibble & (1u << b))) continue;
            const std::size_t i = 4 * k + b;
            if (i >= n_bits) throw ContractError("hex mask sets bits beyond grid size");
            out.set(i);
        }
    }
    return out;
}

}  // namespace oalat
