#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "twistcc/gf2.hpp"

namespace twistcc {

// n-qubit Pauli in symplectic form: i^phase * prod_j P_j with P_j in {I,X,Y,Z}.
// Y is the Hermitian Pauli (x=z=1). phase is a power of i mod 4; Hermitian
// operators carry phase 0 or 2 and sign() is defined for those.
class PauliOperator {
public:
    PauliOperator() = default;
    explicit PauliOperator(std::size_t n) : n_(n), x_(n), z_(n) {}

    static PauliOperator identity(std::size_t n) { return PauliOperator(n); }
    // e.g. "XIZY" or "+XIZY" / "-XIZY"
    static PauliOperator from_string(const std::string& s);

    std::size_t num_qubits() const { return n_; }

    bool x(std::size_t q) const { return x_.get(q); }
    bool z(std::size_t q) const { return z_.get(q); }
    void set_x(std::size_t q, bool v) { x_.set(q, v); }
    void set_z(std::size_t q, bool v) { z_.set(q, v); }

    // 0=I,1=X,2=Z,3=Y on qubit q
    int pauli_at(std::size_t q) const {
        return (x_.get(q) ? 1 : 0) | (z_.get(q) ? 2 : 0);
    }
    void set_pauli(std::size_t q, char p);
    void mul_pauli(std::size_t q, char p);  // right-multiply single-qubit Pauli

    uint8_t phase_exp() const { return phase_; }
    void set_phase_exp(uint8_t e) { phase_ = e & 3; }
    bool is_hermitian() const { return (phase_ & 1) == 0; }
    int sign() const {
        if (!is_hermitian()) throw std::logic_error("pauli phase is imaginary");
        return phase_ == 0 ? 1 : -1;
    }

    std::size_t weight() const;
    bool is_identity() const { return !x_.any() && !z_.any(); }
    bool same_bits(const PauliOperator& o) const { return x_ == o.x_ && z_ == o.z_; }
    bool operator==(const PauliOperator& o) const {
        return n_ == o.n_ && phase_ == o.phase_ && same_bits(o);
    }

    const BitVec& xbits() const { return x_; }
    const BitVec& zbits() const { return z_; }

    // Row of length 2n as (x|z).
    BitVec symplectic_row() const;
    static PauliOperator from_symplectic_row(const BitVec& row, std::size_t n);

    std::string to_string(bool with_sign = true) const;

private:
    std::size_t n_ = 0;
    BitVec x_, z_;
    uint8_t phase_ = 0;  // i^phase
};

bool commutes(const PauliOperator& a, const PauliOperator& b);
PauliOperator multiply(const PauliOperator& a, const PauliOperator& b);

enum class GeneratorKind { Stabilizer, Gauge, Logical };

struct PauliGroupBasis {
    std::size_t n = 0;
    std::vector<PauliOperator> generators;
    std::vector<GeneratorKind> kinds;

    void add(const PauliOperator& p, GeneratorKind k = GeneratorKind::Stabilizer) {
        generators.push_back(p);
        kinds.push_back(k);
    }
    std::size_t size() const { return generators.size(); }
};

std::size_t rank(const PauliGroupBasis& basis);

// Membership up to sign: generator subset whose product has the bits of p.
// `matched_sign` reports whether the product reproduces p's phase exactly.
struct GroupCombination {
    std::vector<std::size_t> indices;
    bool matches_sign = false;
};
std::optional<GroupCombination> in_group(const PauliOperator& p, const PauliGroupBasis& basis);

struct LogicalPair {
    PauliOperator x;
    PauliOperator z;
};

// Canonical logical extraction by symplectic Gram-Schmidt. Throws if
// stabilizer generators do not mutually commute.
std::vector<LogicalPair> extract_logicals(const PauliGroupBasis& stabilizers, std::size_t n);

// Check-matrix export: one generator per row "x1..xn|z1..zn" preceded by a
// JSON header line {n, k, kinds}.
std::string export_check_matrix(const PauliGroupBasis& basis, std::size_t k);

}  // namespace twistcc
