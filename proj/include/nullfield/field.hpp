#pragma once

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "nullfield/errors.hpp"
#include "nullfield/geometry.hpp"

namespace nullfield {

/// Node of an immutable field expression tree. Value is intensity I (a speed);
/// gradient is dI/dx. Nodes never apply the floor/ceiling clamp; that belongs
/// to ScalarField so combinators see raw profiles.
class FieldExpr {
public:
    virtual ~FieldExpr() = default;
    virtual double value(Vec2 p) const = 0;
    virtual Vec2 gradient(Vec2 p) const = 0;
    /// True when p sits on a patch seam where the gradient is one-sided.
    virtual bool on_seam(Vec2 p) const {
        (void)p;
        return false;
    }
};

using FieldPtr = std::shared_ptr<const FieldExpr>;

constexpr double kDefaultIntensityFloor = 1e-6;

/// Scalar intensity field over an evaluation domain with floor/ceiling clamp.
/// Immutable after construction; safe for concurrent reads.
class ScalarField {
public:
    ScalarField() = default;
    ScalarField(FieldPtr root, Domain domain, double floor = kDefaultIntensityFloor,
                double ceiling = kInf);

    /// Clamped intensity. Throws OutOfDomain when p is outside the domain.
    double eval(Vec2 p) const;
    /// Gradient, clamp-aware (zero where the clamp is active). Throws OutOfDomain
    /// and SeamError per the field contract.
    Vec2 grad(Vec2 p) const;

    /// Same as eval/grad but without the domain or seam checks. Integrators use
    /// these: trial steps may poke past the boundary and seams get the one-sided
    /// gradient of whichever piece contains p.
    double eval_unchecked(Vec2 p) const;
    Vec2 grad_unchecked(Vec2 p) const;

    const Domain& domain() const { return domain_; }
    double floor() const { return floor_; }
    double ceiling() const { return ceiling_; }
    const FieldPtr& root() const { return root_; }
    explicit operator bool() const { return static_cast<bool>(root_); }

    ScalarField with_domain(Domain d) const { return ScalarField(root_, d, floor_, ceiling_); }
    ScalarField with_clamp(double floor, double ceiling = kInf) const {
        return ScalarField(root_, domain_, floor, ceiling);
    }

private:
    FieldPtr root_;
    Domain domain_;
    double floor_ = kDefaultIntensityFloor;
    double ceiling_ = kInf;
};

/// Catalog entry for a primitive lens profile. Profiles are defined in canonical
/// coordinates (centered at the origin, axis along +x for the GRIN slab, ramp
/// along +y for the linear lens) and placed via center/rotation/scale.
struct LensSpec {
    enum class Kind { constant, proportional, linear, grin, fisheye, eaton };

    Kind kind = Kind::constant;

    double value = 1.0;        // constant: intensity
    double intercept = 1.0;    // linear: I at the axis
    double slope = 0.0;        // linear: dI/dy in canonical coordinates
    double n0 = 1.0;           // grin/fisheye: baseline index
    double gradient_param = 0.0;  // grin: A in n = n0 (1 - A s^2 / 2)
    double turn = 0.0;         // eaton: turning angle in (0, pi]
    /// Clip radius in canonical units; beyond it the profile continues at its
    /// boundary value. 0 means unbounded. Eaton defaults to 1 (where n = 1).
    double radius = 0.0;
    /// GRIN aperture half-width (perpendicular distance from the optical axis);
    /// 0 picks sqrt(1/A). Must satisfy half_width^2 < 2/A so n stays positive.
    double half_width = 0.0;
    /// Linear lens aperture half-width (|y| clip); 0 means unbounded.
    double aperture = 0.0;

    Vec2 center{0, 0};
    double rotation = 0.0;
    double scale = 1.0;

    static LensSpec constant(double value);
    static LensSpec proportional(Vec2 center = {0, 0});
    static LensSpec linear(double intercept, double slope, double aperture = 0.0);
    static LensSpec grin(double n0, double gradient_param, double half_width = 0.0);
    static LensSpec fisheye(double n0 = 1.0, double radius = 0.0);
    static LensSpec eaton(double turn, double radius = 1.0);
};

/// Build a field computing I = 1/n for the cited index profile (or the direct
/// intensity profile for constant/proportional/linear), constant-extended
/// outside the lens. Throws InvalidParameter naming the offending parameter.
ScalarField make_field(const LensSpec& spec, Domain domain = Domain(),
                       double floor = kDefaultIntensityFloor, double ceiling = kInf);

/// Patch region: a disk or an axis-aligned rectangle (closed sets).
struct PatchRegion {
    std::variant<DiskRegion, Rect> shape;

    static PatchRegion disk(Vec2 center, double radius) {
        return PatchRegion{DiskRegion{center, radius}};
    }
    static PatchRegion rect(Rect r) { return PatchRegion{r}; }

    bool contains(Vec2 p) const;
    /// Unsigned distance from p to the region boundary (for seam detection).
    double boundary_distance(Vec2 p) const;
    bool overlaps(const PatchRegion& other) const;
};

// ---------------------------------------------------------------------------
// Combinators. Each returns a new immutable field; domains and clamps come
// from the first operand unless stated otherwise.
// ---------------------------------------------------------------------------

/// Product of intensity profiles: I = prod I_i, i.e. the product of index
/// profiles 1/(n_1 n_2 ...) for index-defined lenses.
ScalarField product(const std::vector<ScalarField>& factors);

/// Replace the background inside each region by the paired field. Patches are
/// applied in order (later entries win where regions overlap); constructing
/// overlapping patches without explicitly_ordered set throws AmbiguousPatch.
ScalarField patch(const ScalarField& background,
                  const std::vector<std::pair<PatchRegion, ScalarField>>& patches,
                  bool explicitly_ordered = false);

/// Re-express a field at a placement (similarity transform: translate, rotate,
/// uniform scale). Intensity values are unchanged: I'(p) = I(T^-1 p).
ScalarField transformed(const ScalarField& inner, Vec2 center, double rotation, double scale);

/// Bound intensity to [floor, ceiling].
ScalarField clamped(const ScalarField& inner, double floor, double ceiling = kInf);

namespace detail {
/// Central finite-difference gradient of a field expression, step
/// h = cbrt(machine epsilon) * scale. Fallback for profiles without an
/// analytic gradient and the oracle used by gradient-consistency tests.
Vec2 central_difference_gradient(const FieldExpr& f, Vec2 p, double scale);
}  // namespace detail

}  // namespace nullfield
