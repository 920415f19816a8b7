#include "gradstar/report.hpp"

#include "gradstar/errors.hpp"

#include <sstream>

namespace gradstar {

Json integer_json(const Integer& v)
{
    if (v.fits_slong_p())
        return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

GradedStarAlgebra AlgebraDescriptor::build() const
{
    const auto G = AbelianGroup::parse(group);
    if (static_cast<int>(tuple.size()) != m)
        throw ParseError("descriptor tuple has " + std::to_string(tuple.size()) + " entries, m = " + std::to_string(m));
    std::vector<GroupElement> t;
    for (const auto& c : tuple)
        t.push_back(G.element(c));
    return GradedStarAlgebra(ElementaryGrading(G, std::move(t)), Involution(involution, m));
}

AlgebraDescriptor descriptor_from_json(const Json& j)
{
    try {
        AlgebraDescriptor d;
        d.m = j.at("m").get<int>();
        d.group = j.at("group").get<std::string>();
        d.tuple = j.at("tuple").get<std::vector<std::vector<std::int64_t>>>();
        d.involution = parse_involution_kind(j.value("involution", std::string("reflection")));
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad algebra descriptor: ") + e.what());
    }
}

AlgebraDescriptor descriptor_of(const GradedStarAlgebra& alg)
{
    AlgebraDescriptor d;
    d.m = alg.size();
    d.group = alg.grading().group().to_string();
    for (const auto& g : alg.grading().tuple())
        d.tuple.push_back(g.coords());
    d.involution = alg.involution().kind();
    return d;
}

Json to_json(const AlgebraDescriptor& d)
{
    Json j;
    j["m"] = d.m;
    j["group"] = d.group;
    j["tuple"] = d.tuple;
    j["involution"] = to_string(d.involution);
    return j;
}

std::string assignment_entry(const VarSpec& v)
{
    switch (v.symmetry) {
    case Symmetry::symmetric:
        return v.degree.to_string() + "+";
    case Symmetry::skew:
        return v.degree.to_string() + "-";
    default:
        return v.degree.to_string();
    }
}

Json to_json(const Assignment& a)
{
    Json j = Json::array();
    for (const auto& v : a)
        j.push_back(assignment_entry(v));
    return j;
}

Json to_json(const CodimReport& r)
{
    Json j;
    j["algebra"] = r.algebra;
    j["n"] = r.n;
    Json blocks = Json::array();
    for (const auto& b : r.blocks) {
        Json e;
        e["degrees"] = to_json(b.degrees);
        e["rows"] = b.rows;
        e["cols"] = b.cols;
        e["rank"] = b.rank;
        e["multiplicity"] = integer_json(b.multiplicity);
        blocks.push_back(std::move(e));
    }
    j["assignment-blocks"] = std::move(blocks);
    j["total"] = integer_json(r.value);
    j["method"] = r.method;
    Json d = Json::array();
    for (const auto& x : r.discrepancies)
        d.push_back(Json{{"what", x.what}, {"expected", x.expected}, {"actual", x.actual}});
    j["discrepancies"] = std::move(d);
    return j;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

std::string to_csv(const CodimReport& r)
{
    std::ostringstream os;
    os << "algebra,n,degrees,rows,cols,rank,multiplicity\n";
    for (const auto& b : r.blocks) {
        std::string deg;
        for (const auto& v : b.degrees)
            deg += (deg.empty() ? "" : " ") + assignment_entry(v);
        os << csv_field(r.algebra) << ',' << r.n << ',' << csv_field(deg) << ',' << b.rows << ',' << b.cols << ','
           << b.rank << ',' << b.multiplicity.get_str() << '\n';
    }
    os << csv_field(r.algebra) << ',' << r.n << ",total,,," << r.value.get_str() << ",\n";
    return os.str();
}

Json to_json(const CountRecord& r)
{
    Json j;
    j["m"] = r.m;
    j["n"] = r.n;
    j["k"] = r.k;
    j["count"] = integer_json(r.count);
    j["method"] = r.method;
    return j;
}

std::string to_csv(const std::vector<CountRecord>& rs)
{
    std::ostringstream os;
    os << "m,n,k,N_k,method\n";
    for (const auto& r : rs)
        os << r.m << ',' << r.n << ',' << r.k << ',' << r.count.get_str() << ',' << csv_field(r.method) << '\n';
    return os.str();
}

Json to_json(const BasisCertificate& c, const std::string& algebra, int n)
{
    Json j;
    j["algebra"] = algebra;
    j["n"] = n;
    Json blocks = Json::array();
    std::size_t total = 0;
    for (const auto& b : c.blocks) {
        Json e;
        e["degrees"] = to_json(b.degrees);
        e["rows"] = b.space_dim;
        e["cols"] = b.consequences;
        e["rank"] = b.eval_rank;
        e["consequence-rank"] = b.consequence_rank;
        e["kernel-containment"] = b.kernel_containment;
        e["verified"] = b.verified;
        total += b.eval_rank;
        blocks.push_back(std::move(e));
    }
    j["assignment-blocks"] = std::move(blocks);
    j["total"] = total;
    j["method"] = "basis-certificate";
    j["verified"] = c.verified;
    Json d = Json::array();
    if (!c.verified) {
        Json x;
        x["what"] = c.note;
        if (c.counterexample)
            x["counterexample"] = c.counterexample->to_string();
        d.push_back(std::move(x));
    }
    j["discrepancies"] = std::move(d);
    return j;
}

Json to_json(const RootReport& r)
{
    Json j;
    j["n"] = r.n;
    j["c"] = integer_json(r.c);
    j["root"] = r.decimal;
    j["exact"] = r.exact;
    return j;
}

} // namespace gradstar
