#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcg {

// Variable table for one fixed rank n of sl(n+1).
//
// Variables, in storage order:
//   0         : q
//   1 .. n    : nu~_1 .. nu~_n   (nu_i = nu~_i^(2(n+1)); nu~_{n+1} is
//               eliminated through nu~_1 * ... * nu~_{n+1} = 1)
//   n+1 ..    : auxiliary symbols fixed at construction
//
// Every exponent is stored as an integer multiple of 1/unit with
// unit = 4(n+1)^2, which is fine enough for all exponents that arise
// (Cartan quadratic forms contribute denominators up to 2(n+1)^2).
class Session {
public:
    Session(int rank, std::vector<std::string> aux_names = {})
        : n_(rank), unit_(4 * (rank + 1) * (rank + 1)), aux_(std::move(aux_names)) {
        if (rank < 1)
            throw std::invalid_argument("rank must be >= 1");
    }

    int rank() const { return n_; }
    int unit() const { return unit_; }
    int nvars() const { return 1 + n_ + static_cast<int>(aux_.size()); }

    int q_var() const { return 0; }
    int nu_tilde_var(int i) const {
        if (i < 1 || i > n_)
            throw std::out_of_range("nu~ index");
        return i;
    }
    int aux_var(const std::string& name) const {
        for (std::size_t j = 0; j < aux_.size(); ++j)
            if (aux_[j] == name)
                return 1 + n_ + static_cast<int>(j);
        throw std::out_of_range("unknown auxiliary variable: " + name);
    }

    std::string var_name(int v) const {
        if (v == 0)
            return "q";
        if (v >= 1 && v <= n_)
            return "nu~" + std::to_string(v);
        int j = v - 1 - n_;
        if (j >= 0 && j < static_cast<int>(aux_.size()))
            return aux_[j];
        throw std::out_of_range("variable id");
    }

private:
    int n_;
    int unit_;
    std::vector<std::string> aux_;
};

} // namespace qcg
