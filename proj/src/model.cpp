#include "ghzsim/model.hpp"

#include <sstream>
#include <stdexcept>

namespace ghzsim {

char level_char(AtomLevel level) {
    switch (level) {
    case AtomLevel::Excited: return 'e';
    case AtomLevel::GroundL: return 'L';
    case AtomLevel::Ground0: return '0';
    case AtomLevel::GroundR: return 'R';
    }
    return '?';
}

void SystemParams::validate() const {
    if (n_atoms < 3 || n_atoms % 2 == 0)
        throw std::invalid_argument("n_atoms must be odd and >= 3, got " + std::to_string(n_atoms));
    if (v <= 0.0)
        throw std::invalid_argument("cavity-fiber coupling v must be positive");
    if (omega0 < 0.0)
        throw std::invalid_argument("omega0 must be non-negative");
    if (width <= 0.0)
        throw std::invalid_argument("pulse width must be positive");
    if (tau < 0.0)
        throw std::invalid_argument("pulse offset tau must be non-negative");
    if (alpha < 0.0 || alpha > pi / 2)
        throw std::invalid_argument("mixing angle alpha must lie in [0, pi/2]");
    if (kappa < 0.0 || k_fiber < 0.0 || gamma < 0.0)
        throw std::invalid_argument("decay rates must be non-negative");
}

int cavity_mode_count(int n_atoms) { return 2 * n_atoms - 2; }

int cavity_mode_index(int cavity, Polarization pol, int n_atoms) {
    const int last = n_atoms - 1;
    if (cavity < 0 || cavity > last)
        throw std::out_of_range("cavity index out of range");
    if (cavity == 0) {
        if (pol != Polarization::Left)
            throw std::out_of_range("first cavity has only a left-circular mode");
        return 0;
    }
    if (cavity == last) {
        if (pol != Polarization::Right)
            throw std::out_of_range("last cavity has only a right-circular mode");
        return 2 * last - 1;
    }
    return 1 + 2 * (cavity - 1) + (pol == Polarization::Right ? 1 : 0);
}

bool BasisState::field_vacuum() const {
    for (auto n : cavities)
        if (n) return false;
    for (auto n : fibers)
        if (n) return false;
    return true;
}

bool BasisState::has_excited_atom() const {
    for (auto a : atoms)
        if (a == AtomLevel::Excited) return true;
    return false;
}

bool BasisState::has_fiber_photon() const {
    for (auto n : fibers)
        if (n) return true;
    return false;
}

std::string BasisState::label() const {
    std::ostringstream out;
    out << '|';
    for (auto a : atoms) out << level_char(a);
    out << "> c";
    for (auto n : cavities) out << int(n);
    out << " f";
    for (auto n : fibers) out << int(n);
    return out.str();
}

BasisState initial_state(const SystemParams& params) {
    params.validate();
    BasisState s;
    s.atoms.resize(params.n_atoms);
    s.atoms[0] = AtomLevel::Ground0;
    for (int i = 1; i < params.n_atoms; ++i)
        s.atoms[i] = (i % 2 == 1) ? AtomLevel::GroundL : AtomLevel::GroundR;
    s.cavities.assign(cavity_mode_count(params.n_atoms), 0);
    s.fibers.assign(params.n_atoms - 1, 0);
    return s;
}

namespace {

std::uint8_t& mode_occ(BasisState& s, int cavity, Polarization pol, int n) {
    return s.cavities[cavity_mode_index(cavity, pol, n)];
}

void add_photon(std::uint8_t& occ, const char* what) {
    if (occ != 0)
        throw std::logic_error(std::string("double occupancy of ") + what +
                               "; state outside the single-excitation sector");
    occ = 1;
}

} // namespace

std::vector<Coupling> couplings_from(const BasisState& s, const SystemParams& params) {
    const int n = params.n_atoms;
    std::vector<Coupling> out;
    out.reserve(4);

    auto push = [&](CouplingKind kind, bool conj, BasisState&& t) {
        out.push_back(Coupling{kind, conj, std::move(t)});
    };

    // laser drives on the two end atoms: Omega e^{i phi} |e><g0| + h.c.
    for (int atom : {0, n - 1}) {
        const CouplingKind kind = atom == 0 ? CouplingKind::DriveFirst : CouplingKind::DriveLast;
        if (s.atoms[atom] == AtomLevel::Ground0) {
            BasisState t = s;
            t.atoms[atom] = AtomLevel::Excited;
            push(kind, false, std::move(t));
        } else if (s.atoms[atom] == AtomLevel::Excited) {
            BasisState t = s;
            t.atoms[atom] = AtomLevel::Ground0;
            push(kind, true, std::move(t));
        }
    }

    // g a_{i,L} |e>_i<gL| + h.c. for atoms 0..n-2, and the right-circular
    // counterpart for atoms 1..n-1.
    for (int atom = 0; atom < n; ++atom) {
        const bool has_left = atom < n - 1;
        const bool has_right = atom > 0;
        if (s.atoms[atom] == AtomLevel::Excited) {
            if (has_left) {
                BasisState t = s;
                t.atoms[atom] = AtomLevel::GroundL;
                add_photon(mode_occ(t, atom, Polarization::Left, n), "a cavity mode");
                push(CouplingKind::AtomCavity, true, std::move(t));
            }
            if (has_right) {
                BasisState t = s;
                t.atoms[atom] = AtomLevel::GroundR;
                add_photon(mode_occ(t, atom, Polarization::Right, n), "a cavity mode");
                push(CouplingKind::AtomCavity, true, std::move(t));
            }
        } else if (s.atoms[atom] == AtomLevel::GroundL && has_left &&
                   s.cavities[cavity_mode_index(atom, Polarization::Left, n)] > 0) {
            BasisState t = s;
            t.atoms[atom] = AtomLevel::Excited;
            mode_occ(t, atom, Polarization::Left, n) -= 1;
            push(CouplingKind::AtomCavity, false, std::move(t));
        } else if (s.atoms[atom] == AtomLevel::GroundR && has_right &&
                   s.cavities[cavity_mode_index(atom, Polarization::Right, n)] > 0) {
            BasisState t = s;
            t.atoms[atom] = AtomLevel::Excited;
            mode_occ(t, atom, Polarization::Right, n) -= 1;
            push(CouplingKind::AtomCavity, false, std::move(t));
        }
    }

    // v b_f^dag (a_{f,pol} + a_{f+1,pol}) + h.c.; even fibers join left
    // modes, odd fibers join right modes (0-based).
    for (int f = 0; f < n - 1; ++f) {
        const Polarization pol = (f % 2 == 0) ? Polarization::Left : Polarization::Right;
        for (int cavity : {f, f + 1}) {
            const int m = cavity_mode_index(cavity, pol, n);
            if (s.cavities[m] > 0) {
                BasisState t = s;
                t.cavities[m] -= 1;
                add_photon(t.fibers[f], "a fiber mode");
                push(CouplingKind::CavityFiber, false, std::move(t));
            }
            if (s.fibers[f] > 0) {
                BasisState t = s;
                t.fibers[f] -= 1;
                add_photon(t.cavities[m], "a cavity mode");
                push(CouplingKind::CavityFiber, true, std::move(t));
            }
        }
    }

    return out;
}

std::string JumpSpec::label() const {
    std::ostringstream out;
    switch (channel) {
    case DecayChannel::Fiber: out << "fiber_" << site; break;
    case DecayChannel::Cavity: out << "cavity_mode_" << site; break;
    case DecayChannel::Atomic: out << "atom_" << site << "_to_g" << level_char(to); break;
    }
    return out.str();
}

std::vector<JumpSpec> jump_specs(const SystemParams& params) {
    params.validate();
    const int n = params.n_atoms;
    std::vector<JumpSpec> out;
    for (int f = 0; f < n - 1; ++f)
        out.push_back({DecayChannel::Fiber, f, AtomLevel::Excited});
    for (int m = 0; m < cavity_mode_count(n); ++m)
        out.push_back({DecayChannel::Cavity, m, AtomLevel::Excited});
    for (int atom = 0; atom < n; ++atom)
        for (AtomLevel to : {AtomLevel::Ground0, AtomLevel::GroundL, AtomLevel::GroundR})
            out.push_back({DecayChannel::Atomic, atom, to});
    return out;
}

std::optional<BasisState> apply_jump(const JumpSpec& jump, const BasisState& s) {
    switch (jump.channel) {
    case DecayChannel::Fiber:
        if (s.fibers[jump.site] == 0) return std::nullopt;
        {
            BasisState t = s;
            t.fibers[jump.site] -= 1;
            return t;
        }
    case DecayChannel::Cavity:
        if (s.cavities[jump.site] == 0) return std::nullopt;
        {
            BasisState t = s;
            t.cavities[jump.site] -= 1;
            return t;
        }
    case DecayChannel::Atomic:
        if (s.atoms[jump.site] != AtomLevel::Excited) return std::nullopt;
        {
            BasisState t = s;
            t.atoms[jump.site] = jump.to;
            return t;
        }
    }
    return std::nullopt;
}

void Basis::append(const BasisState& s) {
    index_.emplace(s, static_cast<Index>(states_.size()));
    states_.push_back(s);
}

// Breadth-first closure; the coupling graph is a chain, so discovery order
// is the canonical ordering of the basis.
void Basis::close_under_couplings(const SystemParams& params, std::size_t from) {
    for (std::size_t i = from; i < states_.size(); ++i) {
        const BasisState s = states_[i]; // copy: states_ may grow
        for (const Coupling& c : couplings_from(s, params))
            if (!index_.contains(c.target))
                append(c.target);
    }
}

Basis Basis::coherent(const SystemParams& params) {
    params.validate();
    Basis b;
    b.n_atoms_ = params.n_atoms;
    b.append(initial_state(params));
    b.close_under_couplings(params, 0);
    b.coherent_size_ = b.size();
    return b;
}

Basis Basis::dissipative(const SystemParams& params) {
    Basis b = coherent(params);
    const auto jumps = jump_specs(params);
    const std::size_t n_coherent = b.states_.size();
    for (std::size_t i = 0; i < n_coherent; ++i) {
        const BasisState s = b.states_[i];
        for (const JumpSpec& j : jumps)
            if (auto t = apply_jump(j, s); t && !b.index_.contains(*t))
                b.append(*t);
    }
    b.close_under_couplings(params, n_coherent);
    return b;
}

const BasisState& Basis::state_of(Index ordinal) const {
    if (ordinal < 0 || ordinal >= size())
        throw std::out_of_range("basis ordinal " + std::to_string(ordinal) +
                                " out of range [0, " + std::to_string(size()) + ")");
    return states_[static_cast<std::size_t>(ordinal)];
}

Index Basis::index_of(const BasisState& s) const {
    if (auto i = find(s)) return *i;
    throw std::out_of_range("state " + s.label() + " is not in the basis");
}

std::optional<Index> Basis::find(const BasisState& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

} // namespace ghzsim
