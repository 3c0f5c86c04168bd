#include "perfgrp/word.hpp"

#include "perfgrp/errors.hpp"

#include <sstream>

namespace perfgrp {

Word::Word(std::size_t alphabet_size, std::vector<Letter> letters)
    : alphabet_size_(alphabet_size), letters_(std::move(letters)) {
    for (const auto& l : letters_) {
        if (l.index >= alphabet_size_)
            throw InputError("word letter x" + std::to_string(l.index + 1) +
                             " outside alphabet of size " + std::to_string(alphabet_size_));
        if (l.exponent != 1 && l.exponent != -1)
            throw InputError("word letters must have exponent +1 or -1");
    }
    reduce();
}

Word Word::generator(std::size_t alphabet_size, std::size_t index, int exponent) {
    return Word(alphabet_size,
                {Letter{static_cast<std::uint32_t>(index), static_cast<std::int8_t>(exponent)}});
}

Word Word::parse(std::size_t alphabet_size, std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string token;
    std::vector<Letter> letters;
    while (in >> token) {
        if (token == "1")
            continue;
        if (token.size() < 2 || token[0] != 'x')
            throw InputError("bad word token '" + token + "'");
        int exponent = 1;
        std::string number = token.substr(1);
        if (auto caret = number.find('^'); caret != std::string::npos) {
            std::string e = number.substr(caret + 1);
            number = number.substr(0, caret);
            if (e == "-1")
                exponent = -1;
            else if (e != "1")
                throw InputError("word exponents must be 1 or -1: '" + token + "'");
        }
        std::size_t idx = 0;
        try {
            std::size_t used = 0;
            idx = std::stoul(number, &used);
            if (used != number.size())
                throw InputError("bad generator index in '" + token + "'");
        } catch (const std::logic_error&) {
            throw InputError("bad generator index in '" + token + "'");
        }
        if (idx == 0)
            throw InputError("generator indices start at 1: '" + token + "'");
        letters.push_back(
            Letter{static_cast<std::uint32_t>(idx - 1), static_cast<std::int8_t>(exponent)});
    }
    return Word(alphabet_size, std::move(letters));
}

void Word::reduce() {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (const auto& l : letters_) {
        if (!out.empty() && out.back().index == l.index && out.back().exponent == -l.exponent)
            out.pop_back();
        else
            out.push_back(l);
    }
    letters_ = std::move(out);
}

std::vector<std::int64_t> Word::exponent_sums() const {
    std::vector<std::int64_t> sums(alphabet_size_, 0);
    for (const auto& l : letters_)
        sums[l.index] += l.exponent;
    return sums;
}

bool Word::in_commutator_subgroup() const {
    for (auto s : exponent_sums())
        if (s != 0)
            return false;
    return true;
}

Word Word::inverse() const {
    std::vector<Letter> inv(letters_.rbegin(), letters_.rend());
    for (auto& l : inv)
        l.exponent = static_cast<std::int8_t>(-l.exponent);
    return Word(alphabet_size_, std::move(inv));
}

std::string Word::to_string() const {
    if (letters_.empty())
        return "1";
    std::string out;
    for (const auto& l : letters_) {
        if (!out.empty())
            out += ' ';
        out += 'x' + std::to_string(l.index + 1);
        if (l.exponent < 0)
            out += "^-1";
    }
    return out;
}

Word operator*(const Word& a, const Word& b) {
    auto letters = a.letters_;
    letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::max(a.alphabet_size_, b.alphabet_size_), std::move(letters));
}

Word word_commutator(const Word& a, const Word& b) { return a.inverse() * b.inverse() * a * b; }

Word word_conjugate(const Word& a, const Word& b) { return b.inverse() * a * b; }

Permutation evaluate_word(const Word& w, const std::vector<Permutation>& tuple) {
    if (tuple.size() < w.alphabet_size() || tuple.empty())
        throw InputError("evaluate_word: tuple of length " + std::to_string(tuple.size()) +
                         " for alphabet of size " + std::to_string(w.alphabet_size()));
    std::vector<Permutation> inverses;
    inverses.reserve(tuple.size());
    for (const auto& g : tuple)
        inverses.push_back(g.inverse());
    auto result = Permutation::identity(tuple.front().degree());
    for (const auto& l : w.letters())
        result *= l.exponent > 0 ? tuple[l.index] : inverses[l.index];
    return result;
}

} // namespace perfgrp
