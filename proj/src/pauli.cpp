#include "twistcc/pauli.hpp"

#include <sstream>

namespace twistcc {

namespace {

// product table for single-qubit paulis indexed 0=I,1=X,2=Z,3=Y;
// entry = power of i picked up by a*b relative to the bitwise-xor result.
// Derivation: XZ = -iY, ZX = iY, XY = iZ, YX = -iZ, YZ = iX, ZY = -iX.
int phase_table(int a, int b) {
    static const int tbl[4][4] = {
        // I  X  Z  Y
        {0, 0, 0, 0},  // I
        {0, 0, 3, 1},  // X: XZ=-iY, XY=iZ
        {0, 1, 0, 3},  // Z: ZX=iY,  ZY=-iX
        {0, 3, 1, 0},  // Y: YX=-iZ, YZ=iX
    };
    return tbl[a][b];
}

int code_of(char c) {
    switch (c) {
        case 'I': return 0;
        case 'X': return 1;
        case 'Z': return 2;
        case 'Y': return 3;
        default: throw std::invalid_argument("bad pauli char");
    }
}

}  // namespace

PauliOperator PauliOperator::from_string(const std::string& s) {
    std::size_t i = 0;
    uint8_t ph = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') ph = 2;
        ++i;
    }
    PauliOperator p(s.size() - i);
    for (std::size_t q = 0; i < s.size(); ++i, ++q) p.set_pauli(q, s[i]);
    p.set_phase_exp(ph);
    return p;
}

void PauliOperator::set_pauli(std::size_t q, char p) {
    int c = code_of(p);
    x_.set(q, c & 1);
    z_.set(q, (c >> 1) & 1);
}

void PauliOperator::mul_pauli(std::size_t q, char p) {
    int a = pauli_at(q);
    int b = code_of(p);
    phase_ = uint8_t((phase_ + phase_table(a, b)) & 3);
    x_.set(q, (a ^ b) & 1);
    z_.set(q, ((a ^ b) >> 1) & 1);
}

std::size_t PauliOperator::weight() const {
    std::size_t w = 0;
    const auto& xw = x_.words();
    const auto& zw = z_.words();
    for (std::size_t i = 0; i < xw.size(); ++i) w += std::popcount(xw[i] | zw[i]);
    return w;
}

BitVec PauliOperator::symplectic_row() const {
    BitVec row(2 * n_);
    for (std::size_t q = 0; q < n_; ++q) {
        if (x_.get(q)) row.set(q, true);
        if (z_.get(q)) row.set(n_ + q, true);
    }
    return row;
}

PauliOperator PauliOperator::from_symplectic_row(const BitVec& row, std::size_t n) {
    PauliOperator p(n);
    for (std::size_t q = 0; q < n; ++q) {
        p.set_x(q, row.get(q));
        p.set_z(q, row.get(n + q));
    }
    return p;
}

std::string PauliOperator::to_string(bool with_sign) const {
    static const char* names = "IXZY";
    std::string out;
    if (with_sign) {
        switch (phase_) {
            case 0: out += '+'; break;
            case 1: out += "i"; break;
            case 2: out += '-'; break;
            case 3: out += "-i"; break;
        }
    }
    for (std::size_t q = 0; q < n_; ++q) out += names[pauli_at(q)];
    return out;
}

bool commutes(const PauliOperator& a, const PauliOperator& b) {
    if (a.num_qubits() != b.num_qubits()) throw std::invalid_argument("size mismatch");
    return !(a.xbits().dot(b.zbits()) ^ a.zbits().dot(b.xbits()));
}

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) {
    if (a.num_qubits() != b.num_qubits()) throw std::invalid_argument("size mismatch");
    PauliOperator out(a.num_qubits());
    int ph = a.phase_exp() + b.phase_exp();
    for (std::size_t q = 0; q < a.num_qubits(); ++q) {
        int pa = a.pauli_at(q), pb = b.pauli_at(q);
        ph += phase_table(pa, pb);
        int pc = pa ^ pb;
        out.set_x(q, pc & 1);
        out.set_z(q, (pc >> 1) & 1);
    }
    out.set_phase_exp(uint8_t(ph & 3));
    return out;
}

std::size_t rank(const PauliGroupBasis& basis) {
    BitMatrix m(0, 2 * basis.n);
    for (const auto& g : basis.generators) m.add_row(g.symplectic_row());
    if (basis.generators.empty()) return 0;
    return m.rank();
}

std::optional<GroupCombination> in_group(const PauliOperator& p, const PauliGroupBasis& basis) {
    BitMatrix m(0, 2 * basis.n);
    for (const auto& g : basis.generators) m.add_row(g.symplectic_row());
    if (basis.generators.empty()) {
        if (p.is_identity()) return GroupCombination{{}, p.phase_exp() == 0};
        return std::nullopt;
    }
    auto combo = m.solve_combination(p.symplectic_row());
    if (!combo) return std::nullopt;
    GroupCombination out;
    PauliOperator prod = PauliOperator::identity(basis.n);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (combo->get(i)) {
            out.indices.push_back(i);
            prod = multiply(prod, basis.generators[i]);
        }
    }
    out.matches_sign = (prod.phase_exp() == p.phase_exp());
    return out;
}

std::vector<LogicalPair> extract_logicals(const PauliGroupBasis& stabilizers, std::size_t n) {
    for (std::size_t i = 0; i < stabilizers.size(); ++i)
        for (std::size_t j = i + 1; j < stabilizers.size(); ++j)
            if (!commutes(stabilizers.generators[i], stabilizers.generators[j]))
                throw std::invalid_argument("stabilizer generators do not commute");

    // Independent stabilizer rows.
    BitMatrix smat(0, 2 * n);
    for (const auto& g : stabilizers.generators) smat.add_row(g.symplectic_row());
    auto sred = stabilizers.size() ? smat.reduce() : BitMatrix::Reduced{};
    std::size_t s = sred.rows.size();
    std::size_t k = n - s;

    // Centralizer: rows v with  S_x . v_z + S_z . v_x = 0  for all stabilizer
    // rows. Build the constraint matrix with columns swapped (z|x) so a plain
    // nullspace gives symplectic-orthogonal vectors.
    BitMatrix constraints(0, 2 * n);
    for (const auto& r : sred.rows) {
        BitVec swapped(2 * n);
        for (std::size_t q = 0; q < n; ++q) {
            if (r.get(n + q)) swapped.set(q, true);
            if (r.get(q)) swapped.set(n + q, true);
        }
        constraints.add_row(swapped);
    }
    std::vector<BitVec> cent =
        s ? constraints.nullspace() : BitMatrix(0, 2 * n).nullspace();
    if (!s) {
        cent.clear();
        for (std::size_t i = 0; i < 2 * n; ++i) {
            BitVec v(2 * n);
            v.set(i, true);
            cent.push_back(v);
        }
    }

    auto sprod = [n](const BitVec& a, const BitVec& b) {
        bool acc = false;
        for (std::size_t q = 0; q < n; ++q) {
            acc ^= (a.get(q) && b.get(n + q));
            acc ^= (a.get(n + q) && b.get(q));
        }
        return acc;
    };

    // Symplectic Gram-Schmidt on the centralizer; stabilizer-span vectors pair
    // with nothing and drop out.
    std::vector<LogicalPair> pairs;
    std::vector<BitVec> pool = cent;
    while (pairs.size() < k) {
        bool found = false;
        for (std::size_t i = 0; i < pool.size() && !found; ++i) {
            for (std::size_t j = i + 1; j < pool.size() && !found; ++j) {
                if (!sprod(pool[i], pool[j])) continue;
                BitVec a = pool[i], b = pool[j];
                std::vector<BitVec> next;
                for (std::size_t t = 0; t < pool.size(); ++t) {
                    if (t == i || t == j) continue;
                    BitVec v = pool[t];
                    if (sprod(v, b)) v ^= a;
                    if (sprod(v, a)) v ^= b;
                    next.push_back(v);
                }
                pool = std::move(next);
                pairs.push_back({PauliOperator::from_symplectic_row(a, n),
                                 PauliOperator::from_symplectic_row(b, n)});
                found = true;
            }
        }
        if (!found) break;
    }
    if (pairs.size() != k) throw std::logic_error("logical extraction rank mismatch");
    return pairs;
}

std::string export_check_matrix(const PauliGroupBasis& basis, std::size_t k) {
    std::ostringstream os;
    os << "{\"n\":" << basis.n << ",\"k\":" << k << ",\"kinds\":[";
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (i) os << ',';
        switch (basis.kinds[i]) {
            case GeneratorKind::Stabilizer: os << "\"stabilizer\""; break;
            case GeneratorKind::Gauge: os << "\"gauge\""; break;
            case GeneratorKind::Logical: os << "\"logical\""; break;
        }
    }
    os << "]}\n";
    for (const auto& g : basis.generators) {
        for (std::size_t q = 0; q < basis.n; ++q) os << (g.x(q) ? '1' : '0');
        os << '|';
        for (std::size_t q = 0; q < basis.n; ++q) os << (g.z(q) ? '1' : '0');
        os << '\n';
    }
    return os.str();
}

}  // namespace twistcc
