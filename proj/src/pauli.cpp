#include "fragmentia/pauli.hpp"

namespace fragmentia {

int PauliString::y_count() const {
    int c = 0;
    for (int s = 0; s < n_; ++s)
        if (x(s) && z(s)) ++c;
    return c;
}

PauliString PauliString::hermitian(int n, const BitVec &bits) {
    PauliString p(n, bits, 0);
    p.phase_ = p.y_count() % 4;
    return p;
}

PauliString PauliString::single(int n, int site, char pauli) {
    PauliString p(n);
    switch (pauli) {
    case 'I': break;
    case 'X': p.set_x(site, true); break;
    case 'Z': p.set_z(site, true); break;
    case 'Y':
        p.set_x(site, true);
        p.set_z(site, true);
        p.phase_ = 1;
        break;
    default: throw std::invalid_argument("unknown Pauli letter");
    }
    return p;
}

int PauliString::sign() const {
    int d = ((phase_ - y_count()) % 4 + 4) % 4;
    if (d == 0) return 1;
    if (d == 2) return -1;
    throw std::logic_error("non-Hermitian Pauli phase");
}

PauliString PauliString::operator*(const PauliString &o) const {
    if (o.n_ != n_) throw std::invalid_argument("qubit count mismatch");
    // Commuting Z factors of the left operand past X factors of the right one
    // picks up (-1) per site where both are set.
    int swaps = 0;
    for (int s = 0; s < n_; ++s)
        if (z(s) && o.x(s)) ++swaps;
    PauliString out(n_);
    out.bits_ = bits_ ^ o.bits_;
    out.phase_ = (phase_ + o.phase_ + 2 * swaps) % 4;
    return out;
}

std::string PauliString::str() const {
    std::string s;
    s += sign() > 0 ? '+' : '-';
    for (int q = 0; q < n_; ++q) {
        bool xb = x(q), zb = z(q);
        s += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
    }
    return s;
}

} // namespace fragmentia
