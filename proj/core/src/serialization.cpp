// Copyright 2026 The qfibounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qfib/serialization.hpp"

#include <stdexcept>

#include <json.hpp>

namespace qfib {

namespace {

nlohmann::json matrix_to_json(const Eigen::MatrixXcd& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            entries.push_back({m(i, j).real(), m(i, j).imag()});
        }
    }
    nlohmann::json doc;
    doc["dim"] = m.rows();
    doc["entries"] = std::move(entries);
    return doc;
}

Eigen::MatrixXcd matrix_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("entries")) {
        throw std::invalid_argument("operator JSON: expected {dim, entries}");
    }
    const long dim = doc.at("dim").get<long>();
    if (dim < 1) {
        throw std::invalid_argument("operator JSON: dim must be >= 1");
    }
    const auto& entries = doc.at("entries");
    if (!entries.is_array() || static_cast<long>(entries.size()) != dim * dim) {
        throw std::invalid_argument("operator JSON: entries must hold dim*dim [re, im] pairs");
    }
    Eigen::MatrixXcd m(dim, dim);
    long flat = 0;
    for (const auto& pair : entries) {
        if (!pair.is_array() || pair.size() != 2) {
            throw std::invalid_argument("operator JSON: each entry must be [re, im]");
        }
        m(flat / dim, flat % dim) =
            std::complex<double>(pair.at(0).get<double>(), pair.at(1).get<double>());
        ++flat;
    }
    return m;
}

}  // namespace

std::string to_json_string(const HermitianOperator& op) {
    return matrix_to_json(op.matrix()).dump(2) + "\n";
}

std::string to_json_string(const DensityMatrix& rho) {
    return matrix_to_json(rho.matrix()).dump(2) + "\n";
}

std::string to_json_string(const KLocalHamiltonian& h) {
    nlohmann::json doc;
    doc["n_sites"] = h.n_sites();
    doc["local_dim"] = h.local_dim();
    doc["k"] = h.locality();
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& term : h.terms()) {
        nlohmann::json t;
        t["sites"] = term.sites;
        t["op"] = matrix_to_json(term.op.matrix());
        terms.push_back(std::move(t));
    }
    doc["terms"] = std::move(terms);
    return doc.dump(2) + "\n";
}

HermitianOperator hermitian_from_json(const std::string& text) {
    return HermitianOperator(matrix_from_json(nlohmann::json::parse(text)));
}

DensityMatrix density_from_json(const std::string& text) {
    return DensityMatrix(hermitian_from_json(text));
}

KLocalHamiltonian klocal_from_json(const std::string& text) {
    const nlohmann::json doc = nlohmann::json::parse(text);
    if (!doc.contains("n_sites") || !doc.contains("local_dim") || !doc.contains("k") ||
        !doc.contains("terms")) {
        throw std::invalid_argument("Hamiltonian JSON: expected {n_sites, local_dim, k, terms}");
    }
    std::vector<KLocalTerm> terms;
    for (const auto& t : doc.at("terms")) {
        KLocalTerm term{t.at("sites").get<std::vector<int>>(),
                        HermitianOperator(matrix_from_json(t.at("op")))};
        terms.push_back(std::move(term));
    }
    return KLocalHamiltonian(doc.at("n_sites").get<int>(), doc.at("local_dim").get<int>(),
                             doc.at("k").get<int>(), std::move(terms));
}

}  // namespace qfib
