#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "delsarte/catalog.hpp"
#include "delsarte/polygon.hpp"

namespace delsarte {

struct VerifyLine {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Parameters at which the lambda suite compares brute force with the main path:
/// every n <= 60 divisible by div or fiber_div, plus 7, 9 and 25.
std::vector<std::int64_t> oracle_parameters(const RepresentativeFamily& rep);

std::vector<VerifyLine> verify_lambda(const Catalog& cat);
/// Census at bounds 4 and 5, Pick against scan, and classification of every row hull.
std::vector<VerifyLine> verify_polygon(const Catalog& cat);
std::vector<VerifyLine> verify_lemma();
/// Discriminant and j of each representative at div and 2 div against the stored closed forms.
std::vector<VerifyLine> verify_delta(const Catalog& cat);

/// suite is one of lambda, polygon, lemma, delta, all.
std::vector<VerifyLine> run_verify(const Catalog& cat, const std::string& suite);

/// Hull of the (x, y) exponents of a row at its table parameter.
IntegralPolygon row_hull(const FamilyRow& row);

}  // namespace delsarte
