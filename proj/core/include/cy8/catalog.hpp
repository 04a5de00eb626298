#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cy8/elliptic.hpp"
#include "cy8/euler.hpp"
#include "cy8/poly.hpp"
#include "cy8/symbolic.hpp"

namespace cy8 {

enum class VarietyShape {
    DoubleOctic,
    QuadricIntersection,
    FermiAffine,
    FiberProduct,
    QuinticP4,
    CompleteIntersectionP5,
};

std::string shape_name(VarietyShape s);

// Moebius transform of the base line, t -> (a t + b)/(c t + d).
struct Moebius {
    Rat a{1}, b{0}, c{0}, d{1};

    bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
    // image of a point of P^1(F_p); second component false means infinity
    std::pair<std::uint64_t, bool> apply(std::uint64_t t0, bool finite, const PrimeField& F) const;
    std::string str() const;
};

struct FiberProductData {
    std::string left, right;  // fibration ids
    Rat lambda_left{3}, lambda_right{3};
    Moebius matching;  // base point t of the product pairs left@t with right@matching(t)
    // quadratic discriminant d for the trace comparison: the raw trace
    // satisfies T(p) + (d|p) a_p == 0 (mod p) at good primes
    Int trace_twist{1};
};

struct VarietyMeta {
    int chi = 0;
    int h11 = 0;
    int h12 = 0;
    int level = 0;
    std::optional<int> arrangement_cm;     // numbering of one reference table
    std::optional<int> arrangement_meyer;  // numbering of the other
};

struct VarietySpec {
    std::string id;
    VarietyShape shape = VarietyShape::DoubleOctic;
    VarietyMeta meta;

    // double octic: branch factors over {x,y,z,t}; product cached
    std::vector<Poly> branch_factors;
    Poly branch;
    // extra linearly equivalent presentations of the branch (name, factors)
    std::vector<std::pair<std::string, std::vector<Poly>>> alt_branches;

    // quadric intersection u_i^2 = f_i over {x,y,z,t}
    std::vector<Poly> quadrics;
    // the same relations in the source coordinates used by the symbolic
    // certificates (e.g. y_i^2 -> rational form), roster of 8 variables
    std::vector<SquareRewrite> cover_relations;

    // quintic / complete intersection forms (data only)
    std::vector<Poly> ambient_forms;

    std::optional<FiberProductData> fiber_product;

    // quadratic discriminant d of the model: the singular count satisfies
    // count == 1 - (d|p) a_p (mod p) at equisingular odd primes
    Int model_twist{1};

    // congruence semantics: double octics and quadric intersections carry a
    // hard congruence check; other shapes report only
    bool congruence_checked = false;

    // isolated ordinary double points of the model (count over the closure),
    // when the singular locus is isolated
    std::optional<unsigned> node_count;
    bool nodes_isolated = false;

    // Euler stratification input (plane arrangements only)
    std::optional<Arrangement> arrangement;
    std::optional<ResolutionPlan> resolution_plan;
};

struct FibrationSpec {
    std::string id;
    bool has_lambda = false;
    // quartic branch factors over {x, z, t, L}; L is the family parameter
    std::vector<Poly> factor_templates;
    // X1128 is given directly by Weierstrass data
    std::optional<WeierstrassModel> direct_model;
    // declared singular fibers: (location string, type string) per the table
    std::vector<std::pair<std::string, std::string>> declared_fibers;
    std::optional<int> rho;  // Picard number of the generic fiber (metadata)

    std::vector<Poly> quartic_factors(const Rat& lambda) const;
    WeierstrassModel model(const Rat& lambda) const;
};

enum class MapKind { Cremona, CoverSquareMap, CoverRelations, Isogeny, BaseChange, CoordinateChange, OnVariety };

struct MapSpec {
    std::string id;
    std::string source, target;
    std::string degree;  // e.g. "8:1"
    MapKind kind = MapKind::Cremona;

    // polynomial components (cremona, covers, coordinate changes)
    std::vector<Poly> components;
    Poly source_eq, target_eq;                 // for cofactor certificates
    std::vector<SquareRewrite> relations;      // for rewrite certificates
    std::vector<PolyFrac> frac_components;     // on-variety maps
    // isogeny payload
    PolyFrac iso_x, iso_y;
    Poly iso_source_rhs, iso_target_rhs;
    // base-change payload
    std::optional<WeierstrassModel> bc_base, bc_pulled;
    UniPoly bc_substitution;
};

struct Correspondence {
    std::string source, target;
    std::string degree;
    std::string via;  // map id or construction
};

struct FiberProductRow {
    int number = 0;
    std::string octic_id;  // empty when the defining octic is not cataloged
    int octic_euler = 0, octic_h11 = 0;
    std::string octic_label;
    std::string product_id;
    int product_euler = 0, product_h11 = 0, product_h12 = 0;
    std::string product_label;
    int level = 0;
};

class Registry {
  public:
    static const Registry& builtin();
    // standalone parse of a catalog file (JSON, documented in docs/)
    static Registry from_json_text(const std::string& text);
    // builtin registry extended by a user file; duplicate ids are an error
    static Registry builtin_extended_with(const std::string& json_text);

    const VarietySpec& variety(const std::string& id) const;
    const FibrationSpec& fibration(const std::string& id) const;
    const MapSpec& map(const std::string& id) const;
    bool has_variety(const std::string& id) const { return varieties_.count(id) > 0; }

    std::vector<std::string> variety_ids() const;
    std::vector<std::string> fibration_ids() const;
    std::vector<std::string> map_ids() const;
    const std::vector<FiberProductRow>& fiber_product_rows() const { return rows_; }
    const std::vector<Correspondence>& correspondences() const { return corrs_; }

    void add_variety(VarietySpec v, bool allow_override = false);

  private:
    std::map<std::string, VarietySpec> varieties_;
    std::map<std::string, FibrationSpec> fibrations_;
    std::map<std::string, MapSpec> maps_;
    std::vector<FiberProductRow> rows_;
    std::vector<Correspondence> corrs_;
    friend Registry build_builtin();
};

// run the matching symbolic verification for a cataloged map
Certificate verify_map(const Registry& reg, const std::string& map_id);

// directed multigraph of the known correspondences
std::string correspondence_graph_dot(const Registry& reg);
std::string correspondence_graph_json(const Registry& reg);

// JSON serialization of catalog entries (the catalog file schema)
std::string variety_to_json(const VarietySpec& v);
std::string registry_varieties_json(const Registry& reg);

}  // namespace cy8
