#pragma once

// Finitely generated abelian groups Z^a x Z_{d_1} x ... written additively.
// Elements carry reduced coordinates, so equality is structural.

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace gradstar {

class GroupElement;

class AbelianGroup {
public:
    // Trivial group.
    AbelianGroup();
    // One factor per entry: 0 is an infinite cyclic factor, d > 0 is Z_d.
    explicit AbelianGroup(std::vector<std::int64_t> moduli);

    static AbelianGroup free_abelian(std::size_t rank);
    static AbelianGroup cyclic(std::int64_t order);
    static AbelianGroup trivial() { return AbelianGroup(); }

    // Accepts "Z^2", "Z", "Z2", "Z_2", "Z^2 x Z_3", "trivial", "1", "0".
    static AbelianGroup parse(std::string_view text);

    const std::vector<std::int64_t>& moduli() const { return *moduli_; }
    std::size_t factors() const { return moduli_->size(); }
    bool is_trivial() const;

    GroupElement zero() const;
    GroupElement element(std::vector<std::int64_t> coords) const;
    // Unit vector e_i, 0-based.
    GroupElement generator(std::size_t i) const;
    // Comma separated integers, one per factor. Empty text is the neutral element.
    GroupElement parse_element(std::string_view text) const;

    std::string to_string() const;

    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b)
    {
        return a.moduli_ == b.moduli_ || *a.moduli_ == *b.moduli_;
    }

private:
    std::shared_ptr<const std::vector<std::int64_t>> moduli_;
    friend class GroupElement;
};

class GroupElement {
public:
    GroupElement() = default;

    const AbelianGroup& group() const { return group_; }
    const std::vector<std::int64_t>& coords() const { return coords_; }
    std::int64_t operator[](std::size_t i) const { return coords_[i]; }

    bool is_zero() const;

    GroupElement operator+(const GroupElement& other) const;
    GroupElement operator-(const GroupElement& other) const;
    GroupElement operator-() const;
    GroupElement scaled(std::int64_t k) const;

    // "(1,0)" style rendering; the trivial group prints "()".
    std::string to_string() const;

    friend bool operator==(const GroupElement& a, const GroupElement& b)
    {
        return a.coords_ == b.coords_ && a.group_ == b.group_;
    }
    friend bool operator<(const GroupElement& a, const GroupElement& b) { return a.coords_ < b.coords_; }

private:
    GroupElement(AbelianGroup group, std::vector<std::int64_t> coords);
    void reduce();
    void require_same_group(const GroupElement& other) const;

    AbelianGroup group_;
    std::vector<std::int64_t> coords_;
    friend class AbelianGroup;
};

// Free-function form of the group law.
GroupElement group_add(const GroupElement& a, const GroupElement& b);

class GroupHom {
public:
    // images[i] is the image of generator i of the domain. Throws StructuralError
    // when the assignment does not define a homomorphism.
    GroupHom(AbelianGroup domain, AbelianGroup codomain, std::vector<GroupElement> images);

    static GroupHom identity(const AbelianGroup& g);

    const AbelianGroup& domain() const { return domain_; }
    const AbelianGroup& codomain() const { return codomain_; }
    const std::vector<GroupElement>& images() const { return images_; }

    GroupElement operator()(const GroupElement& a) const;

    // (after ∘ this)
    GroupHom then(const GroupHom& after) const;

private:
    AbelianGroup domain_;
    AbelianGroup codomain_;
    std::vector<GroupElement> images_;
};

GroupElement hom_apply(const GroupHom& f, const GroupElement& a);

struct GroupElementHash {
    std::size_t operator()(const GroupElement& g) const noexcept;
};

} // namespace gradstar
