#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lang_expr.hpp"
#include "preact/axioms.hpp"
#include "preact/globalization.hpp"
#include "preact/machine_io.hpp"
#include "preact/minimization.hpp"
#include "preact/prefix_decomposition.hpp"
#include "preact/recognition.hpp"

using nlohmann::json;
using namespace preact;

namespace {

struct Report {
    std::vector<std::string> lines;
    json data = json::object();
    int code = 0;

    void line(const std::string& s) { lines.push_back(s); }
};

// exit 2: unreadable input, schema violation, unusable request
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int parse_state(const PreactionMachine& machine, const std::string& text) {
    if (auto s = machine.state_by_name(text)) return *s;
    try {
        std::size_t used = 0;
        int index = std::stoi(text, &used);
        if (used == text.size() && machine.is_active(index)) return index;
    } catch (const std::exception&) {
    }
    throw UsageError("unknown state '" + text + "'");
}

Word parse_word(const Alphabet& alphabet, const std::string& text) {
    if (text == "-") return Word();
    Word w = word_from_text(text);
    alphabet.require(w, "word");
    return w;
}

// "state|tail" with "-", "%e" or nothing for the empty tail
GlobalClass parse_class(const PreactionMachine& machine, const std::string& text) {
    auto bar = text.rfind('|');
    if (bar == std::string::npos) return GlobalClass{parse_state(machine, text), Word()};
    return GlobalClass{parse_state(machine, text.substr(0, bar)),
                       parse_word(machine.alphabet(), text.substr(bar + 1))};
}

MachineFile load_machine(const std::string& path) {
    try {
        return read_machine_file(path);
    } catch (const std::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

Preacceptor load_acceptor(const MachineFile& f, const std::string& path) {
    if (!has_acceptor(f)) throw UsageError(path + ": machine file has no acceptor block");
    return acceptor_of(f);
}

std::string join_words(const std::vector<Word>& words) {
    if (words.empty()) return "(none)";
    std::string out;
    for (const Word& w : words) {
        if (!out.empty()) out += ' ';
        out += display_word(w);
    }
    return out;
}

json words_json(const std::vector<Word>& words) {
    json a = json::array();
    for (const Word& w : words) a.push_back(display_word(w));
    return a;
}

json class_json(const PreactionMachine& machine, const GlobalClass& c) {
    return {{"anchor", c.anchor},
            {"anchor_name", machine.state_name(c.anchor)},
            {"tail", display_word(c.tail)}};
}

std::vector<Word> parse_word_list(const Alphabet& alphabet, const std::string& text) {
    std::vector<Word> words;
    std::string current;
    auto flush = [&] {
        if (!current.empty()) words.push_back(parse_word(alphabet, current));
        current.clear();
    };
    for (char c : text) {
        if (c == ',')
            flush();
        else if (c != ' ')
            current += c;
    }
    flush();
    return words;
}

Dfa language_entry(const Alphabet& alphabet, const json& j, const std::string& which) {
    if (j.is_string()) return compile(alphabet, j.get<std::string>());
    if (j.is_array()) {
        std::vector<Word> words;
        for (const auto& item : j) {
            Word w = word_from_text(item.get<std::string>());
            alphabet.require(w, which.c_str());
            words.push_back(std::move(w));
        }
        return from_words(alphabet, words);
    }
    throw UsageError(which + ": expected a regex string or a word list");
}

// {"alphabet"?: "ab", "H": regex|words, "C": regex|words}
std::pair<Dfa, Dfa> load_p_language_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError(path + ": cannot read");
    json j;
    try {
        j = json::parse(in);
    } catch (const std::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
    if (!j.contains("H") || !j.contains("C"))
        throw UsageError(path + ": p-language files need fields H and C");
    Alphabet alphabet(j.value("alphabet", "ab"));
    return {language_entry(alphabet, j.at("H"), "H"), language_entry(alphabet, j.at("C"), "C")};
}

// ---------------------------------------------------------------- verbs

Report run_eval(const std::string& path, const std::string& state, const std::string& word) {
    auto file = load_machine(path);
    int s = parse_state(file.machine, state);
    Word w = parse_word(file.machine.alphabet(), word);
    auto result = file.machine.eval(s, w);
    Report r;
    r.data = {{"state", file.machine.state_name(s)}, {"word", display_word(w)},
              {"defined", bool(result)}};
    if (result) {
        r.line(file.machine.state_name(*result));
        r.data["result"] = file.machine.state_name(*result);
    } else {
        r.line("undefined");
        r.code = 1;
    }
    return r;
}

Report run_check_axioms(const std::string& path, std::size_t max_len) {
    auto file = load_machine(path);
    auto report = check_axioms(file.machine, max_len);
    Report r;
    r.line(report.ok ? "PASS" : "FAIL");
    r.line("max-len: " + std::to_string(max_len));
    r.line("states: " + std::to_string(report.states_checked));
    r.line("words: " + std::to_string(report.words_checked));
    r.line("splits: " + std::to_string(report.splits_checked));
    json witnesses = json::array();
    for (const auto& w : report.witnesses) {
        r.line("witness: " + describe(w));
        witnesses.push_back({{"state", w.state},
                             {"state_name", file.machine.state_name(w.state)},
                             {"u", display_word(w.u)},
                             {"v", display_word(w.v)},
                             {"axiom", std::string(1, w.axiom)}});
    }
    r.data = {{"ok", report.ok},           {"max_len", max_len},
              {"states", report.states_checked}, {"words", report.words_checked},
              {"splits", report.splits_checked}, {"witnesses", witnesses}};
    r.code = report.ok ? 0 : 1;
    return r;
}

Report run_globalize(const std::string& path, std::size_t depth) {
    auto file = load_machine(path);
    auto classes = expand(file.machine, depth);
    Report r;
    r.line("depth: " + std::to_string(depth));
    r.line("classes: " + std::to_string(classes.size()));
    json list = json::array();
    for (const auto& c : classes) {
        r.line(render_class(file.machine, c));
        list.push_back(class_json(file.machine, c));
    }
    r.data = {{"depth", depth}, {"count", classes.size()}, {"classes", list}};
    return r;
}

Report run_classes_equal(const std::string& path, const std::string& left,
                         const std::string& right) {
    auto file = load_machine(path);
    auto cl = parse_class(file.machine, left);
    auto cr = parse_class(file.machine, right);
    auto nl = normalize(file.machine, cl.anchor, cl.tail);
    auto nr = normalize(file.machine, cr.anchor, cr.tail);
    bool equal = nl == nr;
    Report r;
    r.line("left: " + render_class(file.machine, nl));
    r.line("right: " + render_class(file.machine, nr));
    r.line(equal ? "equal" : "distinct");
    r.data = {{"left", class_json(file.machine, nl)},
              {"right", class_json(file.machine, nr)},
              {"equal", equal}};
    r.code = equal ? 0 : 1;
    return r;
}

Report run_act(const std::string& path, const std::string& cls, const std::string& word) {
    auto file = load_machine(path);
    auto c = parse_class(file.machine, cls);
    Word w = parse_word(file.machine.alphabet(), word);
    auto start = normalize(file.machine, c.anchor, c.tail);
    auto result = act(file.machine, start, w);
    Report r;
    r.line("class: " + render_class(file.machine, start));
    r.line("word: " + display_word(w));
    r.line("result: " + render_class(file.machine, result));
    r.data = {{"class", class_json(file.machine, start)},
              {"word", display_word(w)},
              {"result", class_json(file.machine, result)}};
    return r;
}

Report run_freeness(const std::string& path, std::size_t depth, std::size_t bound) {
    auto file = load_machine(path);
    auto report = freeness_probe(file.machine, depth, bound);
    Report r;
    r.line("depth: " + std::to_string(depth));
    r.line("bound: " + std::to_string(bound));
    std::size_t total = report.separating.size() + report.collisions.size();
    r.line("classes: " + std::to_string(total));
    r.line("separating: " + std::to_string(report.separating.size()));
    r.line("colliding: " + std::to_string(report.collisions.size()));
    json sep = json::array();
    if (!report.separating.empty()) {
        r.line("separating classes:");
        for (const auto& c : report.separating) {
            r.line(render_class(file.machine, c));
            sep.push_back(class_json(file.machine, c));
        }
    }
    json col = json::array();
    if (!report.collisions.empty()) {
        r.line("first collisions:");
        for (const auto& c : report.collisions) {
            r.line(render_class(file.machine, c.base) + ": " + display_word(c.first) + " ~ " +
                   display_word(c.second));
            col.push_back({{"base", class_json(file.machine, c.base)},
                           {"first", display_word(c.first)},
                           {"second", display_word(c.second)}});
        }
    }
    r.data = {{"depth", depth},       {"bound", bound},          {"classes", total},
              {"separating", sep},    {"collisions", col}};
    return r;
}

Report run_member(const std::string& path, const std::string& word) {
    auto file = load_machine(path);
    auto acceptor = load_acceptor(file, path);
    Word w = parse_word(file.machine.alphabet(), word);
    bool in = accepts(acceptor, w);
    Report r;
    r.line(in ? "accepted" : "rejected");
    r.data = {{"word", display_word(w)}, {"accepted", in}};
    r.code = in ? 0 : 1;
    return r;
}

Report run_lang(const std::string& path, std::size_t max_len) {
    auto file = load_machine(path);
    auto acceptor = load_acceptor(file, path);
    auto words = language_upto(acceptor, max_len);
    Report r;
    r.line("max-len: " + std::to_string(max_len));
    r.line("count: " + std::to_string(words.size()));
    for (const Word& w : words) r.line(display_word(w));
    r.data = {{"max_len", max_len}, {"count", words.size()}, {"words", words_json(words)}};
    return r;
}

LanguageOracle oracle_from_options(const std::string& path, const std::string& expr,
                                   const std::string& alphabet_text) {
    if (!path.empty() && !expr.empty())
        throw UsageError("give either a machine file or --lang, not both");
    if (!expr.empty()) return parse_lang_expr(Alphabet(alphabet_text), expr);
    if (path.empty()) throw UsageError("needs a machine file or --lang");
    auto file = load_machine(path);
    return oracle_of(load_acceptor(file, path));
}

Report run_congruence(const std::string& path, const std::string& expr,
                      const std::string& alphabet_text, std::size_t bound,
                      std::size_t suffix_bound) {
    auto oracle = oracle_from_options(path, expr, alphabet_text);
    auto partition = bounded_right_congruence(oracle, bound, suffix_bound);
    Report r;
    r.line("word-bound: " + std::to_string(bound));
    r.line("suffix-bound: " + std::to_string(suffix_bound));
    r.line("blocks: " + std::to_string(partition.blocks.size()));
    json blocks = json::array();
    for (std::size_t i = 0; i < partition.blocks.size(); ++i) {
        const auto& b = partition.blocks[i];
        r.line("block " + std::to_string(i) + ": rep=" + display_word(b.representative) +
               " inside=" + (b.inside ? "yes" : "no") + " size=" + std::to_string(b.members.size()));
        blocks.push_back({{"representative", display_word(b.representative)},
                          {"inside", b.inside},
                          {"size", b.members.size()},
                          {"members", words_json(b.members)}});
    }
    r.data = {{"word_bound", bound}, {"suffix_bound", suffix_bound}, {"blocks", blocks}};
    return r;
}

Report witness_report(const LanguageOracle& oracle, const std::vector<Word>& reps,
                      std::size_t suffix_bound) {
    auto evidence = nonrecognizability_witness(oracle, reps, suffix_bound);
    Report r;
    r.line("suffix-bound: " + std::to_string(suffix_bound));
    r.line("representatives: " + std::to_string(reps.size()));
    r.line(std::string("complete: ") + (evidence.complete ? "yes" : "no"));
    json pairs = json::array();
    if (!evidence.separations.empty()) r.line("pairs:");
    for (const auto& p : evidence.separations) {
        r.line(display_word(p.left) + "  " + display_word(p.right) + "  " +
               display_word(p.suffix));
        pairs.push_back({{"left", display_word(p.left)},
                         {"right", display_word(p.right)},
                         {"suffix", display_word(p.suffix)}});
    }
    r.data = {{"suffix_bound", suffix_bound},
              {"representatives", words_json(evidence.representatives)},
              {"complete", evidence.complete},
              {"pairs", pairs}};
    r.code = evidence.complete ? 0 : 1;
    return r;
}

Report run_witness(const std::string& path, const std::string& expr,
                   const std::string& alphabet_text, const std::string& reps_text,
                   std::size_t suffix_bound) {
    auto oracle = oracle_from_options(path, expr, alphabet_text);
    auto reps = parse_word_list(oracle.alphabet(), reps_text);
    if (reps.size() < 2) throw UsageError("--reps needs at least two words");
    return witness_report(oracle, reps, suffix_bound);
}

Report run_intersect(const std::string& left_path, const std::string& right_path,
                     const std::string& out) {
    auto left_file = load_machine(left_path);
    auto right_file = load_machine(right_path);
    auto left = load_acceptor(left_file, left_path);
    auto right = load_acceptor(right_file, right_path);
    auto product = intersect_acceptors(left, right);
    Report r;
    r.line("left states: " + std::to_string(left.machine.state_count()));
    r.line("right states: " + std::to_string(right.machine.state_count()));
    r.line("product states: " + std::to_string(product.machine.state_count()));
    r.line("initial: " + product.machine.state_name(product.initial));
    std::string terminals;
    json tnames = json::array();
    for (int t : product.terminal) {
        if (!terminals.empty()) terminals += ' ';
        terminals += product.machine.state_name(t);
        tnames.push_back(product.machine.state_name(t));
    }
    r.line("terminal: " + (terminals.empty() ? "(none)" : terminals));
    r.data = {{"left_states", left.machine.state_count()},
              {"right_states", right.machine.state_count()},
              {"product_states", product.machine.state_count()},
              {"initial", product.machine.state_name(product.initial)},
              {"terminal", tnames}};
    if (!out.empty()) {
        write_machine_file(MachineFile{product.machine, product.initial, product.terminal, nullptr},
                           out);
        r.line("wrote: " + out);
        r.data["wrote"] = out;
    }
    return r;
}

Report run_unary_probe(const std::string& path, std::string symbol_text, std::size_t bound) {
    auto file = load_machine(path);
    auto acceptor = load_acceptor(file, path);
    if (symbol_text.empty()) symbol_text = std::string(1, file.machine.alphabet().symbol(0));
    if (symbol_text.size() != 1) throw UsageError("--symbol needs a single letter");
    auto probe = unary_periodicity_probe(acceptor, symbol_text[0], bound);
    Report r;
    r.line("symbol: " + symbol_text);
    r.line("bound: " + std::to_string(bound));
    std::string profile;
    for (bool b : probe.profile) profile += b ? '1' : '0';
    r.line("profile: " + profile);
    r.data = {{"symbol", symbol_text}, {"bound", bound}, {"profile", profile}};
    if (probe.shape) {
        r.line("preperiod: " + std::to_string(probe.shape->first));
        r.line("period: " + std::to_string(probe.shape->second));
        r.data["preperiod"] = probe.shape->first;
        r.data["period"] = probe.shape->second;
    } else {
        r.line("no periodic shape within bound");
        r.code = 1;
    }
    return r;
}

std::pair<std::size_t, std::size_t> parse_bound_pair(const std::string& text) {
    auto comma = text.find(',');
    try {
        if (comma == std::string::npos) {
            std::size_t n = std::stoul(text);
            return {n, n};
        }
        return {std::stoul(text.substr(0, comma)), std::stoul(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw UsageError("--bound expects N or N,M");
    }
}

Report minimize_report(const MachineFile& input, const MinimalPreacceptor& result,
                       std::size_t word_bound, std::size_t suffix_bound, const std::string& out) {
    const auto& acceptor = result.acceptor;
    Report r;
    r.line("method: " + result.method);
    r.line(std::string("exact: ") + (result.exact ? "yes" : "no"));
    r.line("word-bound: " + std::to_string(word_bound));
    r.line("suffix-bound: " + std::to_string(suffix_bound));
    r.line("states: " + std::to_string(acceptor.machine.state_count()));
    json states = json::array();
    for (int s : acceptor.machine.active()) {
        bool terminal = std::find(acceptor.terminal.begin(), acceptor.terminal.end(), s) !=
                        acceptor.terminal.end();
        std::string line = "state " + std::to_string(s) + ": " + acceptor.machine.state_name(s);
        if (s == acceptor.initial) line += " initial";
        if (terminal) line += " terminal";
        r.line(line);
        states.push_back({{"index", s},
                          {"name", acceptor.machine.state_name(s)},
                          {"initial", s == acceptor.initial},
                          {"terminal", terminal}});
    }
    r.data = {{"method", result.method}, {"exact", result.exact},
              {"word_bound", word_bound}, {"suffix_bound", suffix_bound},
              {"states", states}};
    if (!out.empty()) {
        std::shared_ptr<const MachineFile> source;
        if (result.method == "bounded-signatures")
            source = std::make_shared<MachineFile>(input);
        write_machine_file(MachineFile{acceptor.machine, acceptor.initial, acceptor.terminal,
                                       std::move(source)},
                           out);
        r.line("wrote: " + out);
        r.data["wrote"] = out;
    }
    return r;
}

Report run_minimize(const std::string& path, bool exact, const std::string& bound_text,
                    const std::string& out) {
    auto file = load_machine(path);
    auto acceptor = load_acceptor(file, path);
    auto [word_bound, suffix_bound] = parse_bound_pair(bound_text);
    if (exact) {
        auto lang = language_dfa(acceptor);
        if (!lang)
            throw UsageError("--exact needs a machine with exact reach languages; use --bound");
        return minimize_report(file, minimal_preacceptor_regular(*lang), word_bound, suffix_bound,
                               out);
    }
    return minimize_report(file, minimal_preacceptor_bounded(acceptor, word_bound, suffix_bound),
                           word_bound, suffix_bound, out);
}

Report run_equiv(const std::string& left_path, const std::string& right_path, std::size_t bound) {
    auto left_file = load_machine(left_path);
    auto right_file = load_machine(right_path);
    auto left = load_acceptor(left_file, left_path);
    auto right = load_acceptor(right_file, right_path);
    auto result = syntactically_equivalent(left, right, bound);
    Report r;
    r.line(std::string("exact: ") + (result.exact ? "yes" : "no"));
    r.line("bound: " + std::to_string(bound));
    r.line(std::string("equal: ") + (result.equal ? "yes" : "no"));
    r.data = {{"exact", result.exact}, {"bound", bound}, {"equal", result.equal}};
    if (result.difference) {
        r.line("difference: " + display_word(*result.difference));
        r.data["difference"] = display_word(*result.difference);
    }
    r.code = result.equal ? 0 : 1;
    return r;
}

Report run_trim(const std::string& path, const std::string& out) {
    auto file = load_machine(path);
    auto acceptor = load_acceptor(file, path);
    auto trimmed = trim(acceptor);
    Report r;
    r.line("states: " + std::to_string(trimmed.machine.active().size()) + " of " +
           std::to_string(acceptor.machine.active().size()));
    std::string names;
    json jnames = json::array();
    for (int s : trimmed.machine.active()) {
        if (!names.empty()) names += ' ';
        names += trimmed.machine.state_name(s);
        jnames.push_back(trimmed.machine.state_name(s));
    }
    r.line("active: " + names);
    r.data = {{"before", acceptor.machine.active().size()},
              {"after", trimmed.machine.active().size()},
              {"active", jnames}};
    if (!out.empty()) {
        write_machine_file(MachineFile{trimmed.machine, trimmed.initial, trimmed.terminal,
                                       file.generic_source},
                           out);
        r.line("wrote: " + out);
        r.data["wrote"] = out;
    }
    return r;
}

Report run_decompose(const std::string& path, std::size_t bound) {
    auto file = load_machine(path);
    auto acceptor = load_acceptor(file, path);
    auto result = decompose(acceptor, bound);
    Report r;
    r.line("bound: " + std::to_string(bound));
    r.line("terminals: " + std::to_string(result.terminals.size()));
    json components = json::array();
    for (std::size_t i = 0; i < result.terminals.size(); ++i) {
        const auto& c = result.components[i];
        int t = result.terminals[i];
        auto head = members_upto(c.head, bound);
        auto code = members_upto(c.code, bound);
        r.line("component " + std::to_string(i) + ": terminal " +
               acceptor.machine.state_name(t) + " exact " + (c.exact ? "yes" : "no"));
        r.line("  head: " + join_words(head));
        r.line("  code: " + join_words(code));
        components.push_back({{"terminal", t},
                              {"terminal_name", acceptor.machine.state_name(t)},
                              {"exact", c.exact},
                              {"head", words_json(head)},
                              {"code", words_json(code)}});
    }
    r.data = {{"bound", bound}, {"components", components}};
    return r;
}

Report run_prefix_check(const std::string& path) {
    auto [head, code] = load_p_language_file(path);
    Report r;
    bool ok = true;
    auto check = [&](const char* label, const Dfa& d) {
        auto violation = prefix_violation(d);
        if (!violation) {
            r.line(std::string(label) + ": prefix code");
            r.data[std::string(label) + "_ok"] = true;
        } else {
            r.line(std::string(label) + ": violation: " + display_word(violation->first) +
                   " is a proper prefix of " + display_word(violation->second));
            r.data[std::string(label) + "_ok"] = false;
            r.data[std::string(label) + "_violation"] = {
                {"shorter", display_word(violation->first)},
                {"longer", display_word(violation->second)}};
            ok = false;
        }
    };
    check("H", head);
    check("C", code);
    r.line(std::string("p-language: ") + (ok ? "ok" : "invalid"));
    r.data["ok"] = ok;
    r.code = ok ? 0 : 1;
    return r;
}

Report run_factorize(const std::string& path, const std::string& word) {
    auto [head, code] = load_p_language_file(path);
    std::optional<PLanguage> p;
    try {
        p = make_p_language(std::move(head), std::move(code));
    } catch (const std::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
    Word w = parse_word(p->head.alphabet, word);
    auto factors = unique_factorization(*p, w);
    Report r;
    r.line("word: " + display_word(w));
    r.data["word"] = display_word(w);
    if (!factors) {
        r.line("no factorization");
        r.data["factored"] = false;
        r.code = 1;
        return r;
    }
    r.line("head: " + display_word((*factors)[0]));
    std::vector<Word> codes(factors->begin() + 1, factors->end());
    r.line("code: " + join_words(codes));
    r.data["factored"] = true;
    r.data["head"] = display_word((*factors)[0]);
    r.data["code"] = words_json(codes);
    return r;
}

// ---------------------------------------------------------------- demos

PreactionMachine integer_machine() {
    return PreactionMachine::integer_translation(Alphabet("ab"), {{1}, {-1}}, {{0}, {1}});
}

void demo_eval_line(Report& r, json& samples, const PreactionMachine& machine,
                    const std::string& state, const std::string& word) {
    int s = parse_state(machine, state);
    Word w = parse_word(machine.alphabet(), word);
    auto result = machine.eval(s, w);
    std::string shown = result ? machine.state_name(*result) : "undefined";
    r.line("eval " + state + " . " + display_word(w) + " = " + shown);
    samples.push_back({{"state", state}, {"word", display_word(w)}, {"result", shown}});
}

Report demo_integer(std::size_t bound) {
    auto machine = integer_machine();
    Report r;
    r.line("machine: translation action on the integers, a adds 1, b subtracts 1,"
           " observable {0, 1}");
    json samples = json::array();
    demo_eval_line(r, samples, machine, "0", "ab");
    demo_eval_line(r, samples, machine, "0", "aaabb");
    demo_eval_line(r, samples, machine, "1", "b");
    demo_eval_line(r, samples, machine, "1", "aa");
    auto classes = expand(machine, 2);
    std::string class_line;
    json jclasses = json::array();
    for (const auto& c : classes) {
        if (!class_line.empty()) class_line += ' ';
        class_line += render_class(machine, c);
        jclasses.push_back(class_json(machine, c));
    }
    r.line("classes at depth 2: " + class_line);
    auto fr = freeness_probe(machine, 4, 3);
    r.line("freeness at depth 4, word bound 3: " + std::to_string(fr.separating.size()) +
           " separating classes of " +
           std::to_string(fr.separating.size() + fr.collisions.size()));
    auto acceptor = make_preacceptor(machine, 0, {0, 1});
    auto dec = decompose(acceptor, bound);
    json jcomponents = json::array();
    for (std::size_t i = 0; i < dec.terminals.size(); ++i) {
        auto head = members_upto(dec.components[i].head, bound);
        auto code = members_upto(dec.components[i].code, bound);
        r.line("terminal " + machine.state_name(dec.terminals[i]) + ": head { " +
               join_words(head) + " } code { " + join_words(code) + " } up to length " +
               std::to_string(bound));
        jcomponents.push_back({{"terminal", machine.state_name(dec.terminals[i])},
                               {"head", words_json(head)},
                               {"code", words_json(code)}});
    }
    r.data = {{"demo", "integer"},
              {"bound", bound},
              {"samples", samples},
              {"classes_depth_2", jclasses},
              {"separating", fr.separating.size()},
              {"colliding", fr.collisions.size()},
              {"components", jcomponents}};
    return r;
}

Report demo_example1(std::size_t bound) {
    Alphabet ab("ab");
    auto machine = PreactionMachine::membership(MembershipFamily::equal_blocks(ab, 'a', 'b'));
    auto acceptor = make_preacceptor(machine, 0, {1});
    Report r;
    r.line("language: a^n b^n for n >= 1; not regular, still recognized by a"
           " two-state machine");
    r.line("states: " + machine.state_name(0) + " " + machine.state_name(1));
    json samples = json::array();
    demo_eval_line(r, samples, machine, "[%e]", "aabb");
    demo_eval_line(r, samples, machine, "[ab]", "ab");
    demo_eval_line(r, samples, machine, "[%e]", "aab");
    auto axioms = check_axioms(machine, 6);
    r.line(std::string("axioms at max-len 6: ") + (axioms.ok ? "PASS" : "FAIL"));
    auto words = language_upto(acceptor, bound);
    r.line("accepted up to length " + std::to_string(bound) + ": " + join_words(words));
    auto minimal = minimal_preacceptor_bounded(acceptor, bound, bound);
    r.line("minimal states: " + std::to_string(minimal.acceptor.machine.state_count()) +
           " (method " + minimal.method + ")");
    r.data = {{"demo", "example1"},     {"bound", bound},
              {"samples", samples},     {"axioms_ok", axioms.ok},
              {"language", words_json(words)},
              {"minimal_states", minimal.acceptor.machine.state_count()},
              {"method", minimal.method}};
    return r;
}

Report demo_example2(std::size_t bound) {
    Alphabet ab("ab");
    auto machine = PreactionMachine::membership(MembershipFamily::ideal(ab, {ab.word("ab")}));
    auto acceptor = make_preacceptor(machine, 0, {1});
    Report r;
    r.line("language: the two-sided ideal of ab, every word with ab as a factor");
    r.line("states: " + machine.state_name(0) + " " + machine.state_name(1));
    json samples = json::array();
    demo_eval_line(r, samples, machine, "[%e]", "bab");
    demo_eval_line(r, samples, machine, "[ab]", "bb");
    demo_eval_line(r, samples, machine, "[%e]", "ba");
    auto lang = language_dfa(acceptor);
    bool regular_match = lang && equivalent(*lang, compile(ab, "(a|b)*ab(a|b)*"));
    r.line(std::string("exact regular description: ") + (lang ? "available" : "missing"));
    r.line(std::string("matches (a|b)*ab(a|b)*: ") + (regular_match ? "yes" : "no"));
    auto words = language_upto(acceptor, bound);
    r.line("accepted up to length " + std::to_string(bound) + ": " + join_words(words));
    r.data = {{"demo", "example2"},
              {"bound", bound},
              {"samples", samples},
              {"regular_form", bool(lang)},
              {"regular_match", regular_match},
              {"language", words_json(words)}};
    return r;
}

Report demo_witness(const std::string& name, const std::string& blurb, const std::string& expr,
                    std::size_t bound) {
    Alphabet ab("ab");
    auto oracle = parse_lang_expr(ab, expr);
    std::vector<Word> reps;
    for (std::size_t i = 1; i <= bound; ++i) reps.push_back(Word(std::string(i, 'a')));
    auto r = witness_report(oracle, reps, bound + 2);
    r.lines.insert(r.lines.begin(), "language: " + blurb);
    r.lines.insert(r.lines.begin() + 1, "expression: " + expr);
    r.data["demo"] = name;
    r.data["expression"] = expr;
    return r;
}

Report demo_files(const std::string& out_dir) {
    Alphabet ab("ab");
    Alphabet a1("a");
    std::vector<std::pair<std::string, json>> files;

    auto add = [&](const std::string& name, const MachineFile& f) {
        files.emplace_back(name, machine_file_json(f));
    };

    add("z.json", MachineFile{integer_machine(), 0, {0, 1}, nullptr});
    auto eqm = PreactionMachine::membership(MembershipFamily::equal_blocks(ab, 'a', 'b'));
    add("eqblocks.json", MachineFile{eqm, 0, {1}, nullptr});
    auto idm = PreactionMachine::membership(MembershipFamily::ideal(ab, {ab.word("ab")}));
    add("ideal.json", MachineFile{idm, 0, {1}, nullptr});
    add("abastar.json",
        MachineFile{PreactionMachine::membership(MembershipFamily::regular(ab, "aba*")), 0, {1},
                    nullptr});
    add("abstar.json",
        MachineFile{PreactionMachine::membership(MembershipFamily::regular(ab, "(ab)*")), 0, {0},
                    nullptr});
    add("plang.json",
        MachineFile{PreactionMachine::p_language(from_words(ab, {ab.word("a")}),
                                                 from_words(ab, {ab.word("ab"), ab.word("b")})),
                    0, {1}, nullptr});
    auto product = intersect_acceptors(make_preacceptor(eqm, 0, {1}),
                                       make_preacceptor(idm, 0, {1}));
    add("product.json", MachineFile{product.machine, product.initial, product.terminal, nullptr});
    TotalAction cycle{a1, {"c0", "c1", "c2", "c3", "c4"}, {{1}, {2}, {3}, {4}, {0}}};
    add("cycle5.json",
        MachineFile{PreactionMachine::finite_restriction(cycle, {0}), 0, {0}, nullptr});
    add("unary2.json",
        MachineFile{PreactionMachine::membership(MembershipFamily::regular(a1, "a|aa")), 0,
                    {1, 2}, nullptr});
    // completed automaton for aba* run as a restriction: same language on
    // four states instead of two
    TotalAction host{ab,
                     {"q0", "q1", "q2", "dead"},
                     {{1, 3}, {3, 2}, {2, 3}, {3, 3}}};
    add("competitor4.json",
        MachineFile{PreactionMachine::finite_restriction(host, {0, 1, 2, 3}), 0, {2}, nullptr});

    Report r;
    json names = json::array();
    for (const auto& [name, payload] : files) {
        std::string path = out_dir.empty() ? name : out_dir + "/" + name;
        std::ofstream out(path);
        if (!out) throw UsageError(path + ": cannot write");
        out << payload.dump(2) << "\n";
        r.line("wrote: " + path);
        names.push_back(path);
    }
    std::string ppath = out_dir.empty() ? "plfile.json" : out_dir + "/plfile.json";
    std::ofstream pout(ppath);
    if (!pout) throw UsageError(ppath + ": cannot write");
    pout << json({{"alphabet", "ab"}, {"H", "a"}, {"C", json::array({"ab", "b"})}}).dump(2)
         << "\n";
    r.line("wrote: " + ppath);
    names.push_back(ppath);
    r.data = {{"demo", "files"}, {"wrote", names}};
    return r;
}

Report run_demo(const std::string& name, std::size_t bound, const std::string& out_dir) {
    if (name == "integer") return demo_integer(bound);
    if (name == "example1") return demo_example1(bound);
    if (name == "example2") return demo_example2(bound);
    if (name == "example3")
        return demo_witness(name, "union of a+ and the balanced blocks a^n b^n",
                            "union(re:aa*,eqblocks)", bound);
    if (name == "example4")
        return demo_witness(name, "balanced blocks iterated, then a nonempty a-run",
                            "concat(star(eqblocks),re:aa*)", bound);
    if (name == "example5")
        return demo_witness(name, "iteration of { a^n b^n } union { a }",
                            "star(union(eqblocks,finite:a))", bound);
    if (name == "files") return demo_files(out_dir);
    throw UsageError("unknown demo '" + name +
                     "'; available: integer example1 example2 example3 example4 example5 files");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"preautomata toolkit"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit the report as JSON");

    std::string path, second_path, state, word, left, right, cls, expr, alphabet_text = "ab";
    std::string reps_text, out, symbol, bound_pair = "6,6", demo_name;
    std::size_t max_len = 6, depth = 6, bound = 6, suffix_bound = 6;
    bool exact = false;

    std::function<Report()> run;

    auto with_json = [&](CLI::App* sub) {
        sub->add_flag("--json", as_json, "emit the report as JSON");
        return sub;
    };

    auto* c_eval = with_json(app.add_subcommand("eval", "evaluate a word at a state"));
    c_eval->add_option("machine", path)->required();
    c_eval->add_option("--state", state)->required();
    c_eval->add_option("--word", word)->required();
    c_eval->callback([&] { run = [&] { return run_eval(path, state, word); }; });

    auto* c_axioms = with_json(app.add_subcommand("check-axioms", "verify the preaction laws exhaustively"));
    c_axioms->add_option("machine", path)->required();
    c_axioms->add_option("--max-len", max_len);
    c_axioms->callback([&] { run = [&] { return run_check_axioms(path, max_len); }; });

    auto* c_glob = with_json(app.add_subcommand("globalize", "list globalization classes up to a depth"));
    c_glob->add_option("machine", path)->required();
    c_glob->add_option("--depth", depth);
    c_glob->callback([&] { run = [&] { return run_globalize(path, depth); }; });

    auto* c_eq = with_json(app.add_subcommand("classes-equal", "compare two globalization classes"));
    c_eq->add_option("machine", path)->required();
    c_eq->add_option("--left", left)->required();
    c_eq->add_option("--right", right)->required();
    c_eq->callback([&] { run = [&] { return run_classes_equal(path, left, right); }; });

    auto* c_act = with_json(app.add_subcommand("act", "act a word on a globalization class"));
    c_act->add_option("machine", path)->required();
    c_act->add_option("--class", cls)->required();
    c_act->add_option("--word", word)->required();
    c_act->callback([&] { run = [&] { return run_act(path, cls, word); }; });

    auto* c_free = with_json(app.add_subcommand("freeness", "probe classes separating all short words"));
    c_free->add_option("machine", path)->required();
    c_free->add_option("--depth", depth);
    c_free->add_option("--bound", bound);
    c_free->callback([&] { run = [&] { return run_freeness(path, depth, bound); }; });

    auto* c_member = with_json(app.add_subcommand("member", "test acceptance of a word"));
    c_member->add_option("machine", path)->required();
    c_member->add_option("--word", word)->required();
    c_member->callback([&] { run = [&] { return run_member(path, word); }; });

    auto* c_lang = with_json(app.add_subcommand("lang", "list accepted words up to a length"));
    c_lang->add_option("machine", path)->required();
    c_lang->add_option("--max-len", max_len);
    c_lang->callback([&] { run = [&] { return run_lang(path, max_len); }; });

    auto* c_cong = with_json(app.add_subcommand("congruence", "bounded right-congruence blocks"));
    c_cong->add_option("machine", path);
    c_cong->add_option("--lang", expr, "language expression instead of a machine file");
    c_cong->add_option("--alphabet", alphabet_text);
    c_cong->add_option("--bound", bound);
    c_cong->add_option("--suffix-bound", suffix_bound);
    c_cong->callback(
        [&] { run = [&] { return run_congruence(path, expr, alphabet_text, bound, suffix_bound); }; });

    auto* c_wit = with_json(app.add_subcommand("witness-nonrec",
                                     "separate given words into distinct congruence classes"));
    c_wit->add_option("machine", path);
    c_wit->add_option("--lang", expr, "language expression instead of a machine file");
    c_wit->add_option("--alphabet", alphabet_text);
    c_wit->add_option("--reps", reps_text)->required();
    c_wit->add_option("--suffix-bound", suffix_bound);
    c_wit->callback([&] {
        run = [&] { return run_witness(path, expr, alphabet_text, reps_text, suffix_bound); };
    });

    auto* c_inter = with_json(app.add_subcommand("intersect", "product acceptor of two machines"));
    c_inter->add_option("left", path)->required();
    c_inter->add_option("right", second_path)->required();
    c_inter->add_option("--out", out);
    c_inter->callback([&] { run = [&] { return run_intersect(path, second_path, out); }; });

    auto* c_probe = with_json(app.add_subcommand("unary-probe", "periodicity of acceptance along a letter"));
    c_probe->add_option("machine", path)->required();
    c_probe->add_option("--symbol", symbol);
    c_probe->add_option("--bound", bound);
    c_probe->callback([&] { run = [&] { return run_unary_probe(path, symbol, bound); }; });

    auto* c_min = with_json(app.add_subcommand("minimize", "minimal acceptor for the same language"));
    c_min->add_option("machine", path)->required();
    c_min->add_flag("--exact", exact, "require an exact regular description");
    c_min->add_option("--bound", bound_pair, "word,suffix bounds for the bounded route");
    c_min->add_option("--out", out);
    c_min->callback([&] { run = [&] { return run_minimize(path, exact, bound_pair, out); }; });

    auto* c_equiv = with_json(app.add_subcommand("equiv", "compare accepted languages"));
    c_equiv->add_option("left", path)->required();
    c_equiv->add_option("right", second_path)->required();
    c_equiv->add_option("--bound", bound);
    c_equiv->callback([&] { run = [&] { return run_equiv(path, second_path, bound); }; });

    auto* c_trim = with_json(app.add_subcommand("trim", "restrict to initial and terminal states"));
    c_trim->add_option("machine", path)->required();
    c_trim->add_option("--out", out);
    c_trim->callback([&] { run = [&] { return run_trim(path, out); }; });

    auto* c_dec = with_json(app.add_subcommand("decompose", "head/code components per terminal"));
    c_dec->add_option("machine", path)->required();
    c_dec->add_option("--bound", bound);
    c_dec->callback([&] { run = [&] { return run_decompose(path, bound); }; });

    auto* c_pfx = with_json(app.add_subcommand("prefix-check", "validate a p-language file"));
    c_pfx->add_option("plang", path)->required();
    c_pfx->callback([&] { run = [&] { return run_prefix_check(path); }; });

    auto* c_fac = with_json(app.add_subcommand("factorize", "factor a word as head then code words"));
    c_fac->add_option("plang", path)->required();
    c_fac->add_option("--word", word)->required();
    c_fac->callback([&] { run = [&] { return run_factorize(path, word); }; });

    auto* c_demo = with_json(app.add_subcommand("demo", "guided walkthroughs and sample files"));
    c_demo->add_option("name", demo_name)->required();
    c_demo->add_option("--bound", bound);
    c_demo->add_option("--out", out, "output directory for demo files");
    c_demo->callback([&] { run = [&] { return run_demo(demo_name, bound, out); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Report r = run();
        if (as_json) {
            std::cout << r.data.dump(2) << "\n";
        } else {
            for (const auto& line : r.lines) std::cout << line << "\n";
        }
        return r.code;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
