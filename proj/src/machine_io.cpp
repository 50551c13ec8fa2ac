#include "preact/machine_io.hpp"

#include <fstream>
#include <map>
#include <stdexcept>

namespace preact {

using nlohmann::json;

namespace {

std::map<std::string, int> name_index(const std::vector<std::string>& names, const char* what) {
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < names.size(); ++i)
        if (!index.emplace(names[i], static_cast<int>(i)).second)
            throw std::invalid_argument(std::string(what) + ": duplicate name '" + names[i] + "'");
    return index;
}

int lookup(const std::map<std::string, int>& index, const std::string& name, const char* what) {
    auto it = index.find(name);
    if (it == index.end())
        throw std::invalid_argument(std::string(what) + ": unknown name '" + name + "'");
    return it->second;
}

char single_symbol(const json& j, const char* what) {
    const auto text = j.get<std::string>();
    if (text.size() != 1)
        throw std::invalid_argument(std::string(what) + ": expected a single symbol");
    return text[0];
}

Dfa language_from_json(const Alphabet& alphabet, const json& j, const char* what) {
    if (j.contains("regex")) return compile(alphabet, j.at("regex").get<std::string>());
    if (j.contains("words")) {
        std::vector<Word> words;
        for (const auto& t : j.at("words")) words.push_back(alphabet.word(t.get<std::string>()));
        return from_words(alphabet, words);
    }
    if (j.contains("dfa")) return dfa_from_json(alphabet, j.at("dfa"));
    throw std::invalid_argument(std::string(what) + ": expected regex, words or dfa");
}

TotalAction host_from_json(const Alphabet& alphabet, const json& j) {
    TotalAction host{alphabet, {}, {}};
    for (const auto& s : j.at("states")) host.names.push_back(s.get<std::string>());
    const auto index = name_index(host.names, "host states");
    host.next.assign(host.names.size(), std::vector<int>(alphabet.size(), -1));
    for (const auto& t : j.at("transitions")) {
        const int from = lookup(index, t.at(0).get<std::string>(), "host transition");
        const char sym = single_symbol(t.at(1), "host transition");
        const auto c = alphabet.index(sym);
        if (!c)
            throw std::invalid_argument(std::string("host transition: symbol '") + sym +
                                        "' not in alphabet");
        const int to = lookup(index, t.at(2).get<std::string>(), "host transition");
        if (host.next[from][*c] != -1)
            throw std::invalid_argument("host transition: duplicate for state '" +
                                        host.names[from] + "' symbol '" + sym + "'");
        host.next[from][*c] = to;
    }
    for (std::size_t s = 0; s < host.names.size(); ++s)
        for (std::size_t c = 0; c < alphabet.size(); ++c)
            if (host.next[s][c] == -1)
                throw std::invalid_argument("host transition: missing for state '" +
                                            host.names[s] + "' symbol '" + alphabet.symbol(c) +
                                            "'");
    return host;
}

MembershipFamily family_from_json(const Alphabet& alphabet, const json& j,
                                  std::shared_ptr<const MachineFile>& source_out) {
    const auto type = j.at("type").get<std::string>();
    if (type == "regular")
        return MembershipFamily::regular(alphabet, language_from_json(alphabet, j, "regular family"));
    if (type == "equal_blocks")
        return MembershipFamily::equal_blocks(alphabet, single_symbol(j.at("first"), "family"),
                                              single_symbol(j.at("second"), "family"));
    if (type == "balance")
        return MembershipFamily::balance(alphabet, single_symbol(j.at("plus"), "family"),
                                         single_symbol(j.at("minus"), "family"),
                                         j.at("value").get<long long>());
    if (type == "ideal") {
        std::vector<Word> factors;
        for (const auto& t : j.at("factors")) factors.push_back(alphabet.word(t.get<std::string>()));
        return MembershipFamily::ideal(alphabet, std::move(factors));
    }
    if (type == "generic") {
        auto source = std::make_shared<const MachineFile>(machine_file_from_json(j.at("source")));
        if (!(source->machine.alphabet() == alphabet))
            throw std::invalid_argument("generic family: source alphabet mismatch");
        auto family = MembershipFamily::generic(oracle_of(acceptor_of(*source)),
                                                j.at("suffix_bound").get<std::size_t>());
        source_out = std::move(source);
        return family;
    }
    throw std::invalid_argument("membership family: unknown type '" + type + "'");
}

PreactionMachine machine_from_json(const Alphabet& alphabet, const json& j,
                                   std::shared_ptr<const MachineFile>* source_out) {
    const auto kind = j.at("kind").get<std::string>();
    auto build = [&]() -> PreactionMachine {
        if (kind == "finite_restriction") {
            TotalAction host = host_from_json(alphabet, j.at("host"));
            const auto index = name_index(host.names, "host states");
            std::vector<int> observable;
            for (const auto& s : j.at("observable"))
                observable.push_back(lookup(index, s.get<std::string>(), "observable"));
            return PreactionMachine::finite_restriction(std::move(host), std::move(observable));
        }
        if (kind == "integer_translation") {
            std::vector<std::vector<long long>> letter;
            const auto& letters = j.at("letters");
            for (std::size_t c = 0; c < alphabet.size(); ++c) {
                const std::string key(1, alphabet.symbol(c));
                if (!letters.contains(key))
                    throw std::invalid_argument("integer translation: missing letter '" + key +
                                                "'");
                letter.push_back(letters.at(key).get<std::vector<long long>>());
            }
            std::vector<std::vector<long long>> observable;
            for (const auto& p : j.at("observable"))
                observable.push_back(p.get<std::vector<long long>>());
            return PreactionMachine::integer_translation(alphabet, std::move(letter),
                                                         std::move(observable));
        }
        if (kind == "p_language")
            return PreactionMachine::p_language(
                language_from_json(alphabet, j.at("head"), "head"),
                language_from_json(alphabet, j.at("code"), "code"));
        if (kind == "membership") {
            std::shared_ptr<const MachineFile> source;
            MembershipFamily family = family_from_json(alphabet, j.at("family"), source);
            if (source && !source_out)
                throw std::invalid_argument(
                    "membership: generic families are only supported at the top level");
            if (source_out) *source_out = std::move(source);
            if (j.contains("representatives")) {
                std::vector<Word> reps;
                for (const auto& t : j.at("representatives"))
                    reps.push_back(alphabet.word(t.get<std::string>()));
                return PreactionMachine::membership(std::move(family), std::move(reps));
            }
            return PreactionMachine::membership(std::move(family));
        }
        if (kind == "product")
            return PreactionMachine::product(machine_from_json(alphabet, j.at("left"), nullptr),
                                             machine_from_json(alphabet, j.at("right"), nullptr));
        throw std::invalid_argument("machine: unknown kind '" + kind + "'");
    };
    PreactionMachine machine = build();
    if (j.contains("active")) {
        std::vector<int> active;
        for (const auto& s : j.at("active")) {
            auto state = machine.state_by_name(s.get<std::string>());
            if (!state)
                throw std::invalid_argument("active: unknown state '" + s.get<std::string>() +
                                            "'");
            active.push_back(*state);
        }
        machine = machine.restricted_to(std::move(active));
    }
    return machine;
}

json host_to_json(const TotalAction& host) {
    json transitions = json::array();
    for (std::size_t s = 0; s < host.names.size(); ++s)
        for (std::size_t c = 0; c < host.alphabet.size(); ++c)
            transitions.push_back(json::array({host.names[s],
                                               std::string(1, host.alphabet.symbol(c)),
                                               host.names[host.next[s][c]]}));
    return json{{"states", host.names}, {"transitions", transitions}};
}

json machine_to_json(const PreactionMachine& machine, const MachineFile* file) {
    const Alphabet& alphabet = machine.alphabet();
    json j;
    if (const auto* m = std::get_if<FiniteRestriction>(&machine.backend())) {
        j["kind"] = "finite_restriction";
        j["host"] = host_to_json(m->host);
        json observable = json::array();
        for (int s : m->observable) observable.push_back(m->host.names[s]);
        j["observable"] = observable;
    } else if (const auto* m = std::get_if<IntegerTranslation>(&machine.backend())) {
        j["kind"] = "integer_translation";
        j["dimension"] = m->dimension;
        json letters;
        for (std::size_t c = 0; c < alphabet.size(); ++c)
            letters[std::string(1, alphabet.symbol(c))] = m->letter[c];
        j["letters"] = letters;
        j["observable"] = m->observable;
    } else if (const auto* m = std::get_if<PLanguageMachine>(&machine.backend())) {
        j["kind"] = "p_language";
        j["head"] = json{{"dfa", dfa_to_json(m->head)}};
        j["code"] = json{{"dfa", dfa_to_json(m->code)}};
    } else if (const auto* m = std::get_if<MembershipDriven>(&machine.backend())) {
        j["kind"] = "membership";
        json family;
        if (const auto* r = std::get_if<RegularFamily>(&m->family.impl()))
            family = json{{"type", "regular"}, {"dfa", dfa_to_json(r->language)}};
        else if (const auto* e = std::get_if<EqualBlocksFamily>(&m->family.impl()))
            family = json{{"type", "equal_blocks"},
                          {"first", std::string(1, e->first)},
                          {"second", std::string(1, e->second)}};
        else if (const auto* b = std::get_if<BalanceFamily>(&m->family.impl()))
            family = json{{"type", "balance"},
                          {"plus", std::string(1, b->plus)},
                          {"minus", std::string(1, b->minus)},
                          {"value", b->value}};
        else if (const auto* i = std::get_if<IdealFamily>(&m->family.impl())) {
            json factors = json::array();
            for (const Word& f : i->factors) factors.push_back(f.text());
            family = json{{"type", "ideal"}, {"factors", factors}};
        } else {
            if (!file || !file->generic_source)
                throw std::invalid_argument(
                    "save: generic family machines need a source acceptor file");
            family = json{{"type", "generic"},
                          {"suffix_bound", std::get<GenericFamily>(m->family.impl()).suffix_bound},
                          {"source", machine_file_json(*file->generic_source)}};
        }
        j["family"] = family;
        json reps = json::array();
        for (const Word& rep : m->reps) reps.push_back(rep.text());
        j["representatives"] = reps;
    } else {
        const auto& p = std::get<ProductMachine>(machine.backend());
        j["kind"] = "product";
        j["left"] = machine_to_json(*p.left, nullptr);
        j["right"] = machine_to_json(*p.right, nullptr);
    }
    if (machine.active().size() != static_cast<std::size_t>(machine.state_count())) {
        json active = json::array();
        for (int s : machine.active()) active.push_back(machine.state_name(s));
        j["active"] = active;
    }
    return j;
}

}  // namespace

MachineFile machine_file_from_json(const json& j) {
    const Alphabet alphabet(j.at("alphabet").get<std::string>());
    std::shared_ptr<const MachineFile> source;
    PreactionMachine machine = machine_from_json(alphabet, j.at("machine"), &source);
    MachineFile file{std::move(machine), std::nullopt, {}, std::move(source)};
    if (j.contains("acceptor")) {
        const auto& a = j.at("acceptor");
        auto initial = file.machine.state_by_name(a.at("initial").get<std::string>());
        if (!initial)
            throw std::invalid_argument("acceptor: unknown initial state '" +
                                        a.at("initial").get<std::string>() + "'");
        file.initial = *initial;
        for (const auto& t : a.at("terminal")) {
            auto state = file.machine.state_by_name(t.get<std::string>());
            if (!state)
                throw std::invalid_argument("acceptor: unknown terminal state '" +
                                            t.get<std::string>() + "'");
            file.terminal.push_back(*state);
        }
        acceptor_of(file);  // validates
    }
    return file;
}

json machine_file_json(const MachineFile& f) {
    json j;
    j["alphabet"] = f.machine.alphabet().symbols();
    j["machine"] = machine_to_json(f.machine, &f);
    if (f.initial) {
        json terminal = json::array();
        for (int t : f.terminal) terminal.push_back(f.machine.state_name(t));
        j["acceptor"] = json{{"initial", f.machine.state_name(*f.initial)}, {"terminal", terminal}};
    }
    return j;
}

MachineFile read_machine_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    json j;
    in >> j;
    return machine_file_from_json(j);
}

void write_machine_file(const MachineFile& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << machine_file_json(f).dump(2) << '\n';
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

bool has_acceptor(const MachineFile& f) { return f.initial.has_value(); }

Preacceptor acceptor_of(const MachineFile& f) {
    if (!f.initial) throw std::invalid_argument("machine file has no acceptor block");
    return make_preacceptor(f.machine, *f.initial, f.terminal);
}

Dfa dfa_from_json(const Alphabet& alphabet, const json& j) {
    Dfa d{alphabet, {}, {}, 0, {}};
    for (const auto& s : j.at("states")) d.names.push_back(s.get<std::string>());
    const auto index = name_index(d.names, "dfa states");
    d.next.assign(d.names.size(), std::vector<int>(alphabet.size(), -1));
    for (const auto& t : j.at("transitions")) {
        const int from = lookup(index, t.at(0).get<std::string>(), "dfa transition");
        const char sym = single_symbol(t.at(1), "dfa transition");
        const auto c = alphabet.index(sym);
        if (!c)
            throw std::invalid_argument(std::string("dfa transition: symbol '") + sym +
                                        "' not in alphabet");
        d.next[from][*c] = lookup(index, t.at(2).get<std::string>(), "dfa transition");
    }
    for (std::size_t s = 0; s < d.names.size(); ++s)
        for (std::size_t c = 0; c < alphabet.size(); ++c)
            if (d.next[s][c] == -1)
                throw std::invalid_argument("dfa transition: missing for state '" + d.names[s] +
                                            "' symbol '" + alphabet.symbol(c) + "'");
    d.initial = lookup(index, j.at("initial").get<std::string>(), "dfa initial");
    d.accepting.assign(d.names.size(), false);
    for (const auto& s : j.at("accepting"))
        d.accepting[lookup(index, s.get<std::string>(), "dfa accepting")] = true;
    d.validate();
    return d;
}

json dfa_to_json(const Dfa& d) {
    json transitions = json::array();
    for (std::size_t s = 0; s < d.state_count(); ++s)
        for (std::size_t c = 0; c < d.alphabet.size(); ++c)
            transitions.push_back(json::array(
                {d.names[s], std::string(1, d.alphabet.symbol(c)), d.names[d.next[s][c]]}));
    json accepting = json::array();
    for (std::size_t s = 0; s < d.state_count(); ++s)
        if (d.accepting[s]) accepting.push_back(d.names[s]);
    return json{{"states", d.names},
                {"transitions", transitions},
                {"initial", d.names[d.initial]},
                {"accepting", accepting}};
}

}  // namespace preact
