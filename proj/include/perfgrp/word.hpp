#pragma once

#include "perfgrp/permutation.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace perfgrp {

/// Letter x_{index+1}^{exponent}, exponent is +1 or -1.
struct Letter {
    std::uint32_t index = 0;
    std::int8_t exponent = 1;
    friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word in the free group on x_1..x_m. Stored reduced.
class Word {
public:
    Word() = default;
    explicit Word(std::size_t alphabet_size) : alphabet_size_(alphabet_size) {}
    Word(std::size_t alphabet_size, std::vector<Letter> letters);

    static Word generator(std::size_t alphabet_size, std::size_t index, int exponent = 1);
    /// Parses "x1 x2 x1^-1 x2^-1"; "1" or "" is the empty word.
    static Word parse(std::size_t alphabet_size, std::string_view text);

    std::size_t alphabet_size() const noexcept { return alphabet_size_; }
    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::size_t length() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    std::vector<std::int64_t> exponent_sums() const;
    /// All exponent sums zero, i.e. the word lies in [F,F].
    bool in_commutator_subgroup() const;

    Word inverse() const;
    std::string to_string() const;

    friend Word operator*(const Word& a, const Word& b);
    friend bool operator==(const Word&, const Word&) = default;

private:
    void reduce();
    std::size_t alphabet_size_ = 0;
    std::vector<Letter> letters_;
};

/// [a,b] = a^-1 b^-1 a b and a^b = b^-1 a b on words.
Word word_commutator(const Word& a, const Word& b);
Word word_conjugate(const Word& a, const Word& b);

/// Substitutes tuple[i] for x_{i+1}, composing left to right. Throws
/// InputError if the tuple is shorter than the alphabet or empty.
Permutation evaluate_word(const Word& w, const std::vector<Permutation>& tuple);

} // namespace perfgrp
