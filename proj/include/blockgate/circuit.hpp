#pragma once

<string>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "blockgate/embed.hpp"
#include "blockgate/qcl.hpp"

namespace blockgate {

/// Parsed circuit: an ordered list of placements over a k-wire, dimension-d
/// register. The first step is applied first. Optional target mask for
/// probability queries.
struct CircuitSpec {
    std::size_t d = 2;
    std::size_t k = 1;
    std::vector<GatePlacement> steps;
    std::optional<TargetMask> targets;
};

enum class Severity { warning, error };

struct ParseDiagnostic {
    std::string location;  // "line 3, column 7" or a path such as steps[1].positions
    Severity severity = Severity::error;
    std::string message;
};

std::string to_string(const ParseDiagnostic& diagnostic);

/// Raised by parse_circuit; carries at least one located diagnostic.
class CircuitParseError : public std::runtime_error {
public:
    explicit CircuitParseError(std::vector<ParseDiagnostic> diagnostics);
    const std::vector<ParseDiagnostic>& diagnostics() const noexcept { return diagnostics_; }

private:
    std::vector<ParseDiagnostic> diagnostics_;
};

/// Accepts the circuit JSON schema:
///   {"d": int, "k": int,
///    "steps": [{"gate": name | {"matrix": MatrixJSON, "arity": int},
///               "positions": [int, ...]}, ...],
///    "targets": [int, ...]?}
/// Gate names are matched case-insensitively against the catalog; inline
/// matrices are checked for unitarity. Throws CircuitParseError on rejection.
CircuitSpec parse_circuit(std::string_view text);

/// Inverse of parse_circuit up to value equality.
std::string serialize_circuit(const CircuitSpec& spec);

/// Product of the embedded step operators, first step rightmost. The empty
/// circuit yields the identity.
ComplexMatrix build_circuit_operator(const CircuitSpec& spec);

/// Ket shorthand: "|0110>" for qubits, "|0,2,1>d3" with comma-separated
/// digits for d > 2. Wire 1 is the leftmost symbol.
StateVector parse_ket(std::string_view text);

}  // namespace blockgate
