#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "preact/machine.hpp"
#include "preact/recognition.hpp"

namespace preact {

/// On-disk form of a machine, optionally with an acceptor. Machines built
/// on a generic membership family keep the acceptor file defining their
/// language, so they can be written back out.
struct MachineFile {
    PreactionMachine machine;
    std::optional<int> initial;
    std::vector<int> terminal;
    std::shared_ptr<const MachineFile> generic_source;
};

MachineFile machine_file_from_json(const nlohmann::json& j);
nlohmann::json machine_file_json(const MachineFile& f);

MachineFile read_machine_file(const std::string& path);
void write_machine_file(const MachineFile& f, const std::string& path);

bool has_acceptor(const MachineFile& f);
Preacceptor acceptor_of(const MachineFile& f);

Dfa dfa_from_json(const Alphabet& alphabet, const nlohmann::json& j);
nlohmann::json dfa_to_json(const Dfa& d);

}  // namespace preact
