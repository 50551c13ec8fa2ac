#include "lang_expr.hpp"

#include <stdexcept>
#include <vector>

namespace preact {

namespace {

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& text, const std::string& why) {
    throw std::invalid_argument("language expression '" + text + "': " + why);
}

std::vector<std::string> split_args(const std::string& text, const std::string& inner) {
    std::vector<std::string> args;
    int depth = 0;
    std::string current;
    for (char c : inner) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth < 0) fail(text, "unbalanced ')'");
        if (c == ',' && depth == 0) {
            args.push_back(strip(current));
            current.clear();
        } else {
            current += c;
        }
    }
    if (depth != 0) fail(text, "unbalanced '('");
    args.push_back(strip(current));
    return args;
}

std::vector<Word> split_words(const Alphabet& alphabet, const std::string& text,
                              const std::string& list) {
    std::vector<Word> words;
    std::string current;
    auto flush = [&] {
        Word w = word_from_text(strip(current));
        alphabet.require(w, "language expression");
        words.push_back(std::move(w));
        current.clear();
    };
    for (char c : list) {
        if (c == '|')
            flush();
        else
            current += c;
    }
    flush();
    if (words.empty()) fail(text, "empty word list");
    return words;
}

LanguageOracle parse(const Alphabet& alphabet, const std::string& text, const std::string& part) {
    const std::string expr = strip(part);
    for (const std::string name : {"union", "inter", "concat", "star"}) {
        if (expr.size() > name.size() + 1 && expr.compare(0, name.size() + 1, name + "(") == 0 &&
            expr.back() == ')') {
            auto args = split_args(text, expr.substr(name.size() + 1, expr.size() - name.size() - 2));
            if (name == "star") {
                if (args.size() != 1) fail(text, "star takes one argument");
                return star(parse(alphabet, text, args[0]));
            }
            if (args.size() != 2) fail(text, name + " takes two arguments");
            auto a = parse(alphabet, text, args[0]);
            auto b = parse(alphabet, text, args[1]);
            if (name == "union") return unite(a, b);
            if (name == "inter") return intersect(a, b);
            return concat(a, b);
        }
    }
    if (expr.rfind("re:", 0) == 0)
        return LanguageOracle::from_dfa(compile(alphabet, expr.substr(3)));
    if (expr.rfind("finite:", 0) == 0)
        return LanguageOracle::finite(alphabet, split_words(alphabet, text, expr.substr(7)));
    if (expr.rfind("ideal:", 0) == 0) {
        auto factors = split_words(alphabet, text, expr.substr(6));
        for (const Word& w : factors)
            if (w.empty()) fail(text, "ideal factors must be nonempty");
        return LanguageOracle::ideal(alphabet, factors);
    }
    if (expr == "eqblocks") {
        if (alphabet.size() < 2) fail(text, "eqblocks needs two symbols");
        return LanguageOracle::equal_blocks(alphabet, alphabet.symbol(0), alphabet.symbol(1));
    }
    if (expr.rfind("balance:", 0) == 0) {
        if (alphabet.size() < 2) fail(text, "balance needs two symbols");
        int value = 0;
        try {
            value = std::stoi(expr.substr(8));
        } catch (const std::exception&) {
            fail(text, "balance needs an integer");
        }
        return LanguageOracle::balance_language(alphabet, alphabet.symbol(0), alphabet.symbol(1),
                                                value);
    }
    fail(text, "unknown form '" + expr + "'");
}

}  // namespace

LanguageOracle parse_lang_expr(const Alphabet& alphabet, const std::string& text) {
    return parse(alphabet, text, text);
}

}  // namespace preact
