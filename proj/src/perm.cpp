#include "cgt/perm.hpp"

#include <sstream>

namespace cgt {

Perm Perm::identity(int degree) {
    std::vector<int> im(degree);
    for (int i = 0; i < degree; ++i) im[i] = i;
    return Perm(std::move(im));
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 0 || v >= degree() || seen[v])
            throw std::invalid_argument("not a permutation");
        seen[v] = true;
    }
}

Perm Perm::operator*(const Perm& other) const {
    if (degree() != other.degree()) throw std::invalid_argument("degree mismatch");
    std::vector<int> im(images_.size());
    for (int i = 0; i < degree(); ++i) im[i] = images_[other.images_[i]];
    return Perm(std::move(im));
}

Perm Perm::inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 0; i < degree(); ++i) im[images_[i]] = i;
    return Perm(std::move(im));
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[i] != i) return false;
    return true;
}

Perm Perm::parse_cycles(const std::string& s, int degree) {
    std::vector<int> im(degree);
    for (int i = 0; i < degree; ++i) im[i] = i;
    std::vector<bool> used(degree, false);
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; };
    skip_ws();
    while (pos < s.size()) {
        if (s[pos] != '(') throw std::invalid_argument("expected '(' in cycle string: " + s);
        ++pos;
        std::vector<int> cycle;
        skip_ws();
        while (pos < s.size() && s[pos] != ')') {
            std::size_t end = pos;
            while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
            if (end == pos) throw std::invalid_argument("expected point in cycle string: " + s);
            int v = std::stoi(s.substr(pos, end - pos));
            if (v >= degree) throw std::invalid_argument("point out of range in cycle string: " + s);
            cycle.push_back(v);
            pos = end;
            skip_ws();
        }
        if (pos >= s.size()) throw std::invalid_argument("unterminated cycle: " + s);
        ++pos;
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            int from = cycle[i], to = cycle[(i + 1) % cycle.size()];
            if (used[from]) throw std::invalid_argument("point repeated in cycles: " + s);
            used[from] = true;
            im[from] = to;
        }
        skip_ws();
    }
    return Perm(std::move(im));
}

std::string Perm::cycle_string() const {
    std::ostringstream out;
    std::vector<bool> seen(images_.size(), false);
    bool any = false;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i] || images_[i] == i) continue;
        any = true;
        out << '(';
        int j = i;
        bool first = true;
        do {
            if (!first) out << ' ';
            out << j;
            seen[j] = true;
            j = images_[j];
            first = false;
        } while (j != i);
        out << ')';
    }
    return any ? out.str() : "()";
}

}  // namespace cgt
