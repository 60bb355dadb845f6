#include "nullfield/field.hpp"

#include <algorithm>
#include <cmath>

namespace nullfield {

namespace {

// --------------------------------------------------------------------------
// Primitive profiles, canonical placement (origin-centered).
// --------------------------------------------------------------------------

class ConstantExpr final : public FieldExpr {
public:
    explicit ConstantExpr(double v) : v_(v) {}
    double value(Vec2) const override { return v_; }
    Vec2 gradient(Vec2) const override { return {0, 0}; }

private:
    double v_;
};

// I = r. The intensity that makes motor speed proportional to target distance.
class ProportionalExpr final : public FieldExpr {
public:
    double value(Vec2 p) const override { return p.norm(); }
    Vec2 gradient(Vec2 p) const override {
        const double r = p.norm();
        if (r == 0.0) return {0, 0};
        return p / r;
    }
};

// I = intercept + slope * y, optionally clipped to |y| <= aperture with
// constant continuation.
class LinearExpr final : public FieldExpr {
public:
    LinearExpr(double intercept, double slope, double aperture)
        : intercept_(intercept), slope_(slope), aperture_(aperture) {}
    double value(Vec2 p) const override {
        const double y = aperture_ > 0.0 ? std::clamp(p.y, -aperture_, aperture_) : p.y;
        return intercept_ + slope_ * y;
    }
    Vec2 gradient(Vec2 p) const override {
        if (aperture_ > 0.0 && std::abs(p.y) > aperture_) return {0, 0};
        return {0, slope_};
    }

private:
    double intercept_, slope_, aperture_;
};

// GRIN slab about the x axis: n(s) = n0 (1 - A s^2 / 2) with s = |y|, I = 1/n.
// Clipped at |s| = half_width, constant beyond.
class GrinExpr final : public FieldExpr {
public:
    GrinExpr(double n0, double A, double half_width) : n0_(n0), A_(A), smax_(half_width) {}
    double value(Vec2 p) const override {
        const double s = std::min(std::abs(p.y), smax_);
        return 1.0 / (n0_ * (1.0 - 0.5 * A_ * s * s));
    }
    Vec2 gradient(Vec2 p) const override {
        if (std::abs(p.y) > smax_) return {0, 0};
        const double n = n0_ * (1.0 - 0.5 * A_ * p.y * p.y);
        // dI/dy = -n'/n^2 with n' = -n0 A y.
        return {0, n0_ * A_ * p.y / (n * n)};
    }

private:
    double n0_, A_, smax_;
};

// Maxwell fisheye: n(r) = 2 n0 / (1 + r^2), I = 1/n. Rays circle the center.
class FisheyeExpr final : public FieldExpr {
public:
    FisheyeExpr(double n0, double radius) : n0_(n0), radius_(radius) {}
    double value(Vec2 p) const override {
        double r2 = p.norm2();
        if (radius_ > 0.0) r2 = std::min(r2, radius_ * radius_);
        return (1.0 + r2) / (2.0 * n0_);
    }
    Vec2 gradient(Vec2 p) const override {
        if (radius_ > 0.0 && p.norm2() > radius_ * radius_) return {0, 0};
        return p / n0_;
    }

private:
    double n0_, radius_;
};

// Eaton-type turning lens: n(r) = (2/r - 1)^(turn/(turn+pi)) for r <= radius,
// constant beyond. I = 1/n diverges-free away from the center; the center
// singularity (I -> 0) is handled by the ScalarField floor clamp.
class EatonExpr final : public FieldExpr {
public:
    EatonExpr(double turn, double radius)
        : k_(turn / (turn + kPi)), radius_(radius) {}
    double value(Vec2 p) const override {
        double r = p.norm();
        if (r > radius_) r = radius_;
        if (r == 0.0) return 0.0;
        return std::pow(2.0 / r - 1.0, -k_);
    }
    Vec2 gradient(Vec2 p) const override {
        const double r = p.norm();
        if (r > radius_ || r == 0.0) return {0, 0};
        // I = (2/r - 1)^-k, dI/dr = (2k/r^2) (2/r - 1)^(-k-1).
        const double base = 2.0 / r - 1.0;
        const double didr = 2.0 * k_ / (r * r) * std::pow(base, -k_ - 1.0);
        return p * (didr / r);
    }

private:
    double k_, radius_;
};

// --------------------------------------------------------------------------
// Combinator nodes.
// --------------------------------------------------------------------------

class ProductExpr final : public FieldExpr {
public:
    explicit ProductExpr(std::vector<FieldPtr> factors) : factors_(std::move(factors)) {}
    double value(Vec2 p) const override {
        double v = 1.0;
        for (const auto& f : factors_) v *= f->value(p);
        return v;
    }
    Vec2 gradient(Vec2 p) const override {
        const std::size_t n = factors_.size();
        std::vector<double> vals(n);
        for (std::size_t i = 0; i < n; ++i) vals[i] = factors_[i]->value(p);
        Vec2 g{0, 0};
        for (std::size_t i = 0; i < n; ++i) {
            double rest = 1.0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) rest *= vals[j];
            g = g + factors_[i]->gradient(p) * rest;
        }
        return g;
    }
    bool on_seam(Vec2 p) const override {
        for (const auto& f : factors_)
            if (f->on_seam(p)) return true;
        return false;
    }

private:
    std::vector<FieldPtr> factors_;
};

class PatchExpr final : public FieldExpr {
public:
    PatchExpr(FieldPtr background, std::vector<std::pair<PatchRegion, FieldPtr>> patches)
        : background_(std::move(background)), patches_(std::move(patches)) {}

    const FieldExpr& active(Vec2 p) const {
        // Later patches win: scan in reverse.
        for (auto it = patches_.rbegin(); it != patches_.rend(); ++it)
            if (it->first.contains(p)) return *it->second;
        return *background_;
    }
    double value(Vec2 p) const override { return active(p).value(p); }
    Vec2 gradient(Vec2 p) const override { return active(p).gradient(p); }
    bool on_seam(Vec2 p) const override {
        constexpr double kSeamTol = 1e-12;
        for (const auto& [region, field] : patches_) {
            if (region.boundary_distance(p) <= kSeamTol) return true;
            if (field->on_seam(p)) return true;
        }
        return background_->on_seam(p);
    }

private:
    FieldPtr background_;
    std::vector<std::pair<PatchRegion, FieldPtr>> patches_;
};

class TransformExpr final : public FieldExpr {
public:
    TransformExpr(FieldPtr inner, Vec2 center, double rotation, double scale)
        : inner_(std::move(inner)), center_(center), rotation_(rotation), scale_(scale) {}

    Vec2 to_local(Vec2 p) const { return (p - center_).rotated(-rotation_) / scale_; }

    double value(Vec2 p) const override { return inner_->value(to_local(p)); }
    Vec2 gradient(Vec2 p) const override {
        // q = R(-rot) (p - c) / s  =>  grad_p I = R(rot) grad_q I / s.
        return inner_->gradient(to_local(p)).rotated(rotation_) / scale_;
    }
    bool on_seam(Vec2 p) const override { return inner_->on_seam(to_local(p)); }

private:
    FieldPtr inner_;
    Vec2 center_;
    double rotation_, scale_;
};

class ClampExpr final : public FieldExpr {
public:
    ClampExpr(FieldPtr inner, double floor, double ceiling)
        : inner_(std::move(inner)), floor_(floor), ceiling_(ceiling) {}
    double value(Vec2 p) const override {
        return std::clamp(inner_->value(p), floor_, ceiling_);
    }
    Vec2 gradient(Vec2 p) const override {
        const double v = inner_->value(p);
        if (v < floor_ || v > ceiling_) return {0, 0};
        return inner_->gradient(p);
    }
    bool on_seam(Vec2 p) const override { return inner_->on_seam(p); }

private:
    FieldPtr inner_;
    double floor_, ceiling_;
};

FieldPtr placed(FieldPtr canonical, const LensSpec& spec) {
    if (spec.center.x == 0.0 && spec.center.y == 0.0 && spec.rotation == 0.0 &&
        spec.scale == 1.0)
        return canonical;
    return std::make_shared<TransformExpr>(std::move(canonical), spec.center, spec.rotation,
                                           spec.scale);
}

}  // namespace

// --------------------------------------------------------------------------
// ScalarField
// --------------------------------------------------------------------------

ScalarField::ScalarField(FieldPtr root, Domain domain, double floor, double ceiling)
    : root_(std::move(root)), domain_(domain), floor_(floor), ceiling_(ceiling) {
    if (!(floor >= 0.0)) throw InvalidParameter("floor", "intensity floor must be >= 0");
    if (!(ceiling > floor)) throw InvalidParameter("ceiling", "must exceed the floor");
}

double ScalarField::eval(Vec2 p) const {
    if (!domain_.contains(p)) throw OutOfDomain(p);
    return eval_unchecked(p);
}

Vec2 ScalarField::grad(Vec2 p) const {
    if (!domain_.contains(p)) throw OutOfDomain(p);
    if (root_->on_seam(p)) throw SeamError(p);
    return grad_unchecked(p);
}

double ScalarField::eval_unchecked(Vec2 p) const {
    return std::clamp(root_->value(p), floor_, ceiling_);
}

Vec2 ScalarField::grad_unchecked(Vec2 p) const {
    const double v = root_->value(p);
    if (v < floor_ || v > ceiling_) return {0, 0};
    return root_->gradient(p);
}

// --------------------------------------------------------------------------
// LensSpec factories and validation
// --------------------------------------------------------------------------

LensSpec LensSpec::constant(double value) {
    LensSpec s;
    s.kind = Kind::constant;
    s.value = value;
    return s;
}
LensSpec LensSpec::proportional(Vec2 center) {
    LensSpec s;
    s.kind = Kind::proportional;
    s.center = center;
    return s;
}
LensSpec LensSpec::linear(double intercept, double slope, double aperture) {
    LensSpec s;
    s.kind = Kind::linear;
    s.intercept = intercept;
    s.slope = slope;
    s.aperture = aperture;
    return s;
}
LensSpec LensSpec::grin(double n0, double gradient_param, double half_width) {
    LensSpec s;
    s.kind = Kind::grin;
    s.n0 = n0;
    s.gradient_param = gradient_param;
    s.half_width = half_width;
    return s;
}
LensSpec LensSpec::fisheye(double n0, double radius) {
    LensSpec s;
    s.kind = Kind::fisheye;
    s.n0 = n0;
    s.radius = radius;
    return s;
}
LensSpec LensSpec::eaton(double turn, double radius) {
    LensSpec s;
    s.kind = Kind::eaton;
    s.turn = turn;
    s.radius = radius;
    return s;
}

ScalarField make_field(const LensSpec& spec, Domain domain, double floor, double ceiling) {
    if (!(spec.scale > 0.0)) throw InvalidParameter("scale", "placement scale must be > 0");

    FieldPtr node;
    switch (spec.kind) {
        case LensSpec::Kind::constant:
            if (!(spec.value >= 0.0))
                throw InvalidParameter("value", "constant intensity must be >= 0");
            node = std::make_shared<ConstantExpr>(spec.value);
            break;
        case LensSpec::Kind::proportional:
            node = std::make_shared<ProportionalExpr>();
            break;
        case LensSpec::Kind::linear:
            if (spec.aperture < 0.0)
                throw InvalidParameter("aperture", "aperture must be >= 0 (0 = unbounded)");
            node = std::make_shared<LinearExpr>(spec.intercept, spec.slope, spec.aperture);
            break;
        case LensSpec::Kind::grin: {
            if (!(spec.gradient_param > 0.0))
                throw InvalidParameter("gradient_param", "GRIN gradient parameter A must be > 0");
            if (!(spec.n0 > 0.0)) throw InvalidParameter("n0", "baseline index must be > 0");
            double smax = spec.half_width;
            if (smax == 0.0) smax = std::sqrt(1.0 / spec.gradient_param);
            if (!(smax > 0.0) || smax * smax >= 2.0 / spec.gradient_param)
                throw InvalidParameter("half_width",
                                       "GRIN aperture requires half_width^2 < 2/A so n > 0");
            node = std::make_shared<GrinExpr>(spec.n0, spec.gradient_param, smax);
            break;
        }
        case LensSpec::Kind::fisheye:
            if (!(spec.n0 > 0.0)) throw InvalidParameter("n0", "baseline index must be > 0");
            if (spec.radius < 0.0)
                throw InvalidParameter("radius", "clip radius must be >= 0 (0 = unbounded)");
            node = std::make_shared<FisheyeExpr>(spec.n0, spec.radius);
            break;
        case LensSpec::Kind::eaton: {
            if (!(spec.turn > 0.0 && spec.turn <= kPi))
                throw InvalidParameter("turn", "Eaton turning angle must lie in (0, pi]");
            const double radius = spec.radius == 0.0 ? 1.0 : spec.radius;
            if (!(radius > 0.0)) throw InvalidParameter("radius", "lens radius must be > 0");
            node = std::make_shared<EatonExpr>(spec.turn, radius);
            break;
        }
    }
    return ScalarField(placed(std::move(node), spec), domain, floor, ceiling);
}

// --------------------------------------------------------------------------
// PatchRegion
// --------------------------------------------------------------------------

bool PatchRegion::contains(Vec2 p) const {
    if (auto* d = std::get_if<DiskRegion>(&shape)) return d->contains(p);
    return std::get<Rect>(shape).contains(p);
}

double PatchRegion::boundary_distance(Vec2 p) const {
    if (auto* d = std::get_if<DiskRegion>(&shape))
        return std::abs((p - d->center).norm() - d->radius);
    const Rect& r = std::get<Rect>(shape);
    if (r.contains(p)) {
        return std::min(std::min(p.x - r.xmin, r.xmax - p.x),
                        std::min(p.y - r.ymin, r.ymax - p.y));
    }
    const double dx = std::max({r.xmin - p.x, 0.0, p.x - r.xmax});
    const double dy = std::max({r.ymin - p.y, 0.0, p.y - r.ymax});
    return std::sqrt(dx * dx + dy * dy);
}

bool PatchRegion::overlaps(const PatchRegion& other) const {
    const auto* d1 = std::get_if<DiskRegion>(&shape);
    const auto* d2 = std::get_if<DiskRegion>(&other.shape);
    if (d1 && d2) {
        const double rr = d1->radius + d2->radius;
        return (d1->center - d2->center).norm2() < rr * rr;
    }
    if (!d1 && !d2) {
        const Rect& a = std::get<Rect>(shape);
        const Rect& b = std::get<Rect>(other.shape);
        return a.xmin < b.xmax && b.xmin < a.xmax && a.ymin < b.ymax && b.ymin < a.ymax;
    }
    const DiskRegion& d = d1 ? *d1 : *d2;
    const Rect& r = d1 ? std::get<Rect>(other.shape) : std::get<Rect>(shape);
    const Vec2 q{std::clamp(d.center.x, r.xmin, r.xmax), std::clamp(d.center.y, r.ymin, r.ymax)};
    return (q - d.center).norm2() < d.radius * d.radius;
}

// --------------------------------------------------------------------------
// Combinators
// --------------------------------------------------------------------------

ScalarField product(const std::vector<ScalarField>& factors) {
    if (factors.empty()) throw InvalidParameter("factors", "product needs at least one field");
    std::vector<FieldPtr> roots;
    roots.reserve(factors.size());
    for (const auto& f : factors) roots.push_back(f.root());
    return ScalarField(std::make_shared<ProductExpr>(std::move(roots)), factors.front().domain(),
                       factors.front().floor(), factors.front().ceiling());
}

ScalarField patch(const ScalarField& background,
                  const std::vector<std::pair<PatchRegion, ScalarField>>& patches,
                  bool explicitly_ordered) {
    if (!explicitly_ordered) {
        for (std::size_t i = 0; i < patches.size(); ++i)
            for (std::size_t j = i + 1; j < patches.size(); ++j)
                if (patches[i].first.overlaps(patches[j].first))
                    throw AmbiguousPatch("patch regions " + std::to_string(i) + " and " +
                                         std::to_string(j) +
                                         " overlap; pass an explicit order");
    }
    std::vector<std::pair<PatchRegion, FieldPtr>> entries;
    entries.reserve(patches.size());
    for (const auto& [region, field] : patches) entries.emplace_back(region, field.root());
    return ScalarField(std::make_shared<PatchExpr>(background.root(), std::move(entries)),
                       background.domain(), background.floor(), background.ceiling());
}

ScalarField transformed(const ScalarField& inner, Vec2 center, double rotation, double scale) {
    if (!(scale > 0.0)) throw InvalidParameter("scale", "placement scale must be > 0");
    return ScalarField(std::make_shared<TransformExpr>(inner.root(), center, rotation, scale),
                       inner.domain(), inner.floor(), inner.ceiling());
}

ScalarField clamped(const ScalarField& inner, double floor, double ceiling) {
    if (!(floor >= 0.0)) throw InvalidParameter("floor", "intensity floor must be >= 0");
    if (!(ceiling > floor)) throw InvalidParameter("ceiling", "must exceed the floor");
    return ScalarField(std::make_shared<ClampExpr>(inner.root(), floor, ceiling), inner.domain(),
                       inner.floor(), inner.ceiling());
}

namespace detail {

Vec2 central_difference_gradient(const FieldExpr& f, Vec2 p, double scale) {
    const double h = std::cbrt(std::numeric_limits<double>::epsilon()) * std::max(scale, 1e-6);
    const double gx = (f.value({p.x + h, p.y}) - f.value({p.x - h, p.y})) / (2.0 * h);
    const double gy = (f.value({p.x, p.y + h}) - f.value({p.x, p.y - h})) / (2.0 * h);
    return {gx, gy};
}

}  // namespace detail

}  // namespace nullfield
