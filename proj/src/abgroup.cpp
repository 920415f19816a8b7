#include "gradstar/abgroup.hpp"

#include "gradstar/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace gradstar {

namespace {

std::shared_ptr<const std::vector<std::int64_t>> trivial_moduli()
{
    static const auto empty = std::make_shared<const std::vector<std::int64_t>>();
    return empty;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::int64_t parse_int(std::string_view s, std::string_view context)
{
    s = trim(s);
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("expected an integer in '" + std::string(context) + "', got '" + std::string(s) + "'");
    return v;
}

std::int64_t mod_reduce(std::int64_t x, std::int64_t d)
{
    std::int64_t r = x % d;
    return r < 0 ? r + d : r;
}

} // namespace

AbelianGroup::AbelianGroup() : moduli_(trivial_moduli()) {}

AbelianGroup::AbelianGroup(std::vector<std::int64_t> moduli)
{
    for (auto d : moduli)
        if (d < 0)
            throw StructuralError("group moduli must be non-negative");
    // Z_1 factors are trivial; dropping them keeps coordinates canonical.
    moduli.erase(std::remove(moduli.begin(), moduli.end(), std::int64_t{1}), moduli.end());
    moduli_ = moduli.empty() ? trivial_moduli() : std::make_shared<const std::vector<std::int64_t>>(std::move(moduli));
}

AbelianGroup AbelianGroup::free_abelian(std::size_t rank)
{
    return AbelianGroup(std::vector<std::int64_t>(rank, 0));
}

AbelianGroup AbelianGroup::cyclic(std::int64_t order) { return AbelianGroup({order}); }

bool AbelianGroup::is_trivial() const { return moduli_->empty(); }

AbelianGroup AbelianGroup::parse(std::string_view text)
{
    text = trim(text);
    if (text.empty() || text == "trivial" || text == "1" || text == "0" || text == "{0}" || text == "{e}")
        return AbelianGroup();
    std::vector<std::int64_t> moduli;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(" x ", pos);
        std::string_view part = trim(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
        if (part.empty() || part.front() != 'Z')
            throw ParseError("bad group factor '" + std::string(part) + "' in '" + std::string(text) + "'");
        part.remove_prefix(1);
        if (part.empty()) {
            moduli.push_back(0);
        } else if (part.front() == '^') {
            part.remove_prefix(1);
            auto r = parse_int(part, text);
            if (r < 0)
                throw ParseError("negative rank in '" + std::string(text) + "'");
            moduli.insert(moduli.end(), static_cast<std::size_t>(r), 0);
        } else {
            if (part.front() == '_')
                part.remove_prefix(1);
            auto d = parse_int(part, text);
            if (d <= 0)
                throw ParseError("cyclic order must be positive in '" + std::string(text) + "'");
            moduli.push_back(d);
        }
        if (next == std::string_view::npos)
            break;
        pos = next + 3;
    }
    return AbelianGroup(std::move(moduli));
}

GroupElement AbelianGroup::zero() const
{
    return GroupElement(*this, std::vector<std::int64_t>(factors(), 0));
}

GroupElement AbelianGroup::element(std::vector<std::int64_t> coords) const
{
    if (coords.size() != factors())
        throw StructuralError("element has " + std::to_string(coords.size()) + " coordinates, group " + to_string() +
                              " has " + std::to_string(factors()) + " factors");
    return GroupElement(*this, std::move(coords));
}

GroupElement AbelianGroup::generator(std::size_t i) const
{
    if (i >= factors())
        throw StructuralError("generator index out of range");
    std::vector<std::int64_t> c(factors(), 0);
    c[i] = 1;
    return GroupElement(*this, std::move(c));
}

GroupElement AbelianGroup::parse_element(std::string_view text) const
{
    text = trim(text);
    if (!text.empty() && text.front() == '(' && text.back() == ')')
        text = trim(text.substr(1, text.size() - 2));
    std::vector<std::int64_t> coords;
    if (!text.empty()) {
        std::size_t pos = 0;
        while (true) {
            auto next = text.find(',', pos);
            coords.push_back(parse_int(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos), text));
            if (next == std::string_view::npos)
                break;
            pos = next + 1;
        }
    }
    return element(std::move(coords));
}

std::string AbelianGroup::to_string() const
{
    if (is_trivial())
        return "trivial";
    std::ostringstream os;
    std::size_t i = 0;
    bool first = true;
    while (i < factors()) {
        if (!first)
            os << " x ";
        first = false;
        if ((*moduli_)[i] == 0) {
            std::size_t j = i;
            while (j < factors() && (*moduli_)[j] == 0)
                ++j;
            os << 'Z';
            if (j - i > 1)
                os << '^' << (j - i);
            i = j;
        } else {
            os << "Z_" << (*moduli_)[i];
            ++i;
        }
    }
    return os.str();
}

GroupElement::GroupElement(AbelianGroup group, std::vector<std::int64_t> coords)
    : group_(std::move(group)), coords_(std::move(coords))
{
    reduce();
}

void GroupElement::reduce()
{
    const auto& mod = group_.moduli();
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (mod[i] > 0)
            coords_[i] = mod_reduce(coords_[i], mod[i]);
}

void GroupElement::require_same_group(const GroupElement& other) const
{
    if (!(group_ == other.group_))
        throw StructuralError("group elements belong to different groups: " + group_.to_string() + " vs " +
                              other.group_.to_string());
}

bool GroupElement::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c == 0; });
}

GroupElement GroupElement::operator+(const GroupElement& other) const
{
    require_same_group(other);
    std::vector<std::int64_t> c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] += other.coords_[i];
    return GroupElement(group_, std::move(c));
}

GroupElement GroupElement::operator-() const
{
    std::vector<std::int64_t> c(coords_);
    for (auto& x : c)
        x = -x;
    return GroupElement(group_, std::move(c));
}

GroupElement GroupElement::operator-(const GroupElement& other) const { return *this + (-other); }

GroupElement GroupElement::scaled(std::int64_t k) const
{
    std::vector<std::int64_t> c(coords_);
    for (auto& x : c)
        x *= k;
    return GroupElement(group_, std::move(c));
}

std::string GroupElement::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i)
        os << (i ? "," : "") << coords_[i];
    os << ')';
    return os.str();
}

GroupElement group_add(const GroupElement& a, const GroupElement& b) { return a + b; }

GroupHom::GroupHom(AbelianGroup domain, AbelianGroup codomain, std::vector<GroupElement> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images))
{
    if (images_.size() != domain_.factors())
        throw StructuralError("homomorphism needs one image per domain generator");
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (!(images_[i].group() == codomain_))
            throw StructuralError("image of generator " + std::to_string(i + 1) + " is not in the codomain");
        auto d = domain_.moduli()[i];
        if (d > 0 && !images_[i].scaled(d).is_zero())
            throw StructuralError("not well defined: generator " + std::to_string(i + 1) + " has order " +
                                  std::to_string(d) + " but its image " + images_[i].to_string() + " does not");
    }
}

GroupHom GroupHom::identity(const AbelianGroup& g)
{
    std::vector<GroupElement> images;
    for (std::size_t i = 0; i < g.factors(); ++i)
        images.push_back(g.generator(i));
    return GroupHom(g, g, std::move(images));
}

GroupElement GroupHom::operator()(const GroupElement& a) const
{
    if (!(a.group() == domain_))
        throw StructuralError("element " + a.to_string() + " is not in the domain " + domain_.to_string());
    GroupElement out = codomain_.zero();
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (a[i] != 0)
            out = out + images_[i].scaled(a[i]);
    return out;
}

GroupHom GroupHom::then(const GroupHom& after) const
{
    if (!(after.domain() == codomain_))
        throw StructuralError("cannot compose: codomain and domain differ");
    std::vector<GroupElement> images;
    for (const auto& img : images_)
        images.push_back(after(img));
    return GroupHom(domain_, after.codomain(), std::move(images));
}

GroupElement hom_apply(const GroupHom& f, const GroupElement& a) { return f(a); }

std::size_t GroupElementHash::operator()(const GroupElement& g) const noexcept
{
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto c : g.coords())
        h ^= std::hash<std::int64_t>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

} // namespace gradstar
