#pragma once

// JSON and CSV rendering of oracle results, plus the JSON algebra descriptor.

#include "gradstar/eval.hpp"
#include "gradstar/goodmono.hpp"
#include "gradstar/utalg.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace gradstar {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json integer_json(const Integer& v);

// {"m": int, "group": string, "tuple": [[int]], "involution": "reflection"|"symplectic"}
struct AlgebraDescriptor {
    int m = 0;
    std::string group;
    std::vector<std::vector<std::int64_t>> tuple;
    InvolutionKind involution = InvolutionKind::reflection;

    GradedStarAlgebra build() const;
};

// Throws ParseError on missing or mistyped fields.
AlgebraDescriptor descriptor_from_json(const Json& j);
AlgebraDescriptor descriptor_of(const GradedStarAlgebra& alg);
Json to_json(const AlgebraDescriptor& d);

// "(1,0)" for a free variable, "(1)+" / "(1)-" for symmetric / skew ones.
std::string assignment_entry(const VarSpec& v);
Json to_json(const Assignment& a);

Json to_json(const CodimReport& r);
std::string to_csv(const CodimReport& r);

Json to_json(const CountRecord& r);
std::string to_csv(const std::vector<CountRecord>& rs);

Json to_json(const BasisCertificate& c, const std::string& algebra, int n);

Json to_json(const RootReport& r);

// RFC 4180 quoting for a single field.
std::string csv_field(const std::string& s);

} // namespace gradstar
