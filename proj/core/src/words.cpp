#include "ratsub/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ratsub {

namespace {
const std::string kReserved = "()|*,";
}

bool Alphabet::valid_name(const std::string& name, bool allow_prime_suffix) {
    if (name.empty()) return false;
    for (std::size_t i = 0; i < name.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(name[i]);
        if (!std::isprint(c) || std::isspace(c)) return false;
        if (kReserved.find(name[i]) != std::string::npos) return false;
        if (name[i] == '\'') {
            if (!allow_prime_suffix || i + 1 != name.size() || i == 0) return false;
        }
    }
    return true;
}

Alphabet::Alphabet(std::vector<std::string> names) {
    for (auto& n : names) add(n);
}

Letter Alphabet::add(const std::string& name) {
    if (!valid_name(name))
        throw parse_error("invalid letter name: '" + name + "'");
    if (index_.count(name))
        throw parse_error("duplicate letter name: '" + name + "'");
    Letter id = static_cast<Letter>(names_.size());
    names_.push_back(name);
    index_.emplace(name, id);
    return id;
}

std::optional<Letter> Alphabet::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Letter Alphabet::require(const std::string& name) const {
    auto l = find(name);
    if (!l) throw parse_error("letter '" + name + "' is not in the alphabet");
    return *l;
}

InvolutiveAlphabet::InvolutiveAlphabet(Alphabet base, std::vector<Letter> inv)
    : base_(std::move(base)), inv_(std::move(inv)) {
    if (inv_.size() != base_.size())
        throw validation_error("involution must be total");
    for (Letter a = 0; a < inv_.size(); ++a) {
        if (inv_[a] >= inv_.size() || inv_[inv_[a]] != a)
            throw validation_error("involution is not an involution");
    }
}

InvolutiveAlphabet InvolutiveAlphabet::with_inverses(const std::vector<std::string>& base_names) {
    Alphabet a;
    std::vector<Letter> inv;
    for (const auto& n : base_names) {
        if (!Alphabet::valid_name(n, /*allow_prime_suffix=*/false))
            throw parse_error("invalid generator name: '" + n + "'");
        Letter pos = a.add(n);
        Letter neg = a.add(n + "'");
        inv.push_back(neg);
        inv.push_back(pos);
        (void)pos;
    }
    return InvolutiveAlphabet(std::move(a), std::move(inv));
}

bool InvolutiveAlphabet::fixed_point_free() const {
    for (Letter a = 0; a < inv_.size(); ++a)
        if (inv_[a] == a) return false;
    return true;
}

Word Morphism::apply(const Word& w) const {
    Word out;
    for (Letter a : w) {
        if (a >= images.size())
            throw alphabet_mismatch("morphism applied to letter outside its source alphabet");
        const Word& im = images[a];
        out.insert(out.end(), im.begin(), im.end());
    }
    return out;
}

Morphism Morphism::identity(const Alphabet& a) {
    Morphism m{a, a, {}};
    m.images.reserve(a.size());
    for (Letter x = 0; x < a.size(); ++x) m.images.push_back(Word{x});
    return m;
}

Word parse_word(const Alphabet& a, const std::string& text) {
    Word w;
    std::istringstream in(text);
    std::string tok;
    std::vector<std::string> toks;
    while (in >> tok) toks.push_back(tok);
    if (toks.size() == 1 && toks[0] == "1") return w;
    for (const auto& t : toks) {
        if (t == "1")
            throw parse_error("'1' (the empty word) cannot appear inside a word literal");
        w.push_back(a.require(t));
    }
    return w;
}

std::string format_word(const Alphabet& a, const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += a.name(w[i]);
    }
    return out;
}

Word free_reduce(const InvolutiveAlphabet& a, const Word& w) {
    Word stack;
    for (Letter x : w) {
        if (!stack.empty() && stack.back() == a.inverse(x))
            stack.pop_back();
        else
            stack.push_back(x);
    }
    return stack;
}

Word invert_word(const InvolutiveAlphabet& a, const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(a.inverse(*it));
    return out;
}

} // namespace ratsub
