#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ghzsim/types.hpp"

namespace ghzsim {

// Tripod atom: one excited level and three ground levels, told apart by what
// couples them to |e>: the left-circular cavity mode (gL), the driving laser
// (g0), or the right-circular cavity mode (gR).
enum class AtomLevel : std::uint8_t { Excited, GroundL, Ground0, GroundR };

char level_char(AtomLevel level); // 'e', 'L', '0', 'R'

// All frequencies in units of the atom-cavity coupling g = 1.
struct SystemParams {
    int n_atoms = 3;       // odd, >= 3
    double v = 10.0;       // cavity-fiber hopping
    double omega0 = 0.1;   // peak Rabi frequency of the end-atom lasers
    double alpha = pi / 4; // mixing angle; tan(alpha) sets the final weights
    double tau = 50.0;     // pulse center offset
    double width = 80.0;   // Gaussian pulse width T
    double phi1 = 0.0;     // laser phase on the first atom
    double phiN = pi;      // laser phase on the last atom
    double kappa = 0.0;    // decay rate per cavity mode
    double k_fiber = 0.0;  // decay rate per fiber mode
    double gamma = 0.0;    // atomic decay rate per ground-state branch

    static constexpr double g = 1.0;

    void validate() const; // throws std::invalid_argument
};

enum class Polarization : std::uint8_t { Left, Right };

// The two end cavities carry one circular mode each (left for the first
// cavity, right for the last); every middle cavity carries both. Modes are
// stored flat, cavity-major, left before right.
int cavity_mode_count(int n_atoms);
int cavity_mode_index(int cavity, Polarization pol, int n_atoms);

// One basis vector of the single-excitation sector: atomic levels plus the
// photon number of every cavity mode and fiber.
struct BasisState {
    std::vector<AtomLevel> atoms;        // n_atoms entries
    std::vector<std::uint8_t> cavities;  // cavity_mode_count entries
    std::vector<std::uint8_t> fibers;    // n_atoms - 1 entries

    bool field_vacuum() const;
    bool has_excited_atom() const;
    bool has_fiber_photon() const;
    std::string label() const; // e.g. "|0LR> c0000 f00"

    friend bool operator==(const BasisState&, const BasisState&) = default;
    friend auto operator<=>(const BasisState&, const BasisState&) = default;
};

// |g0, gL, gR, gL, ..., gR>, all fields in vacuum.
BasisState initial_state(const SystemParams& params);

// The four Hermitian coupling families of the Hamiltonian. "conjugated"
// marks the partner that carries the conjugate coefficient.
enum class CouplingKind : std::uint8_t { DriveFirst, DriveLast, AtomCavity, CavityFiber };

struct Coupling {
    CouplingKind kind;
    bool conjugated;
    BasisState target;
};

// Every state reachable from `s` by a single coupling term, regardless of
// the instantaneous pulse amplitudes (the couplings are structural).
std::vector<Coupling> couplings_from(const BasisState& s, const SystemParams& params);

enum class DecayChannel : std::uint8_t { Fiber, Cavity, Atomic };

// One collapse channel: a fiber or cavity-mode annihilation operator, or an
// atomic lowering |to><e| on one atom.
struct JumpSpec {
    DecayChannel channel;
    int site;          // fiber index, flat cavity-mode index, or atom index
    AtomLevel to;      // target level for atomic channels
    std::string label() const;
};

// Canonical channel order: fibers, cavity modes, then per-atom lowerings to
// g0, gL, gR.
std::vector<JumpSpec> jump_specs(const SystemParams& params);

// Image of `s` under the channel operator, or nothing if it annihilates.
// All matrix elements are 1 in the single-excitation sector.
std::optional<BasisState> apply_jump(const JumpSpec& jump, const BasisState& s);

// Ordered basis with ordinal lookup. The coherent basis is closed under the
// couplings alone and is always a prefix of the dissipative basis, which
// additionally holds every state one collapse away from a coherent state.
class Basis {
public:
    static Basis coherent(const SystemParams& params);
    static Basis dissipative(const SystemParams& params);

    Index size() const { return static_cast<Index>(states_.size()); }
    Index coherent_size() const { return coherent_size_; }
    int n_atoms() const { return n_atoms_; }

    const BasisState& state_of(Index ordinal) const; // throws std::out_of_range
    Index index_of(const BasisState& s) const;       // throws std::out_of_range
    std::optional<Index> find(const BasisState& s) const;

    const std::vector<BasisState>& states() const { return states_; }

private:
    Basis() = default;
    void append(const BasisState& s);
    void close_under_couplings(const SystemParams& params, std::size_t from);

    std::vector<BasisState> states_;
    std::map<BasisState, Index> index_;
    Index coherent_size_ = 0;
    int n_atoms_ = 0;
};

} // namespace ghzsim
