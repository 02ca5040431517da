#include "delpezzo/catalog.hpp"

namespace delpezzo {

const std::vector<VarietyRecord>& variety_catalog() {
  static const std::vector<VarietyRecord> records = [] {
    std::vector<VarietyRecord> t;
    auto rec = [&](const char* name, int d, int r, int n, const char* eq, const char* amb,
                   const char* sing, const char* notes, bool maximal) {
      t.push_back(VarietyRecord{name, d, r, n, eq, amb, sing, notes, maximal});
    };

    rec("X_8_1_3", 8, 1, 3, "P^3", "P^3", "smooth", "projective 3-space", true);
    rec("X_7_2_3", 7, 2, 3, "Bl_P(P^3)", "P^3 blown up at a point", "smooth",
        "also P_{P^2}(O(-1)+O(-2))", true);

    rec("X_6_2_4", 6, 2, 4, "P^2 x P^2", "P^8 (Segre embedding)", "smooth", "", true);
    rec("X_6_2_3", 6, 2, 3, "x1*y1 + x2*y2 + x3*y3 = 0", "P^2 x P^2", "smooth",
        "the flag threefold Fl(1,2;3)", false);
    rec("X_6_3_3", 6, 3, 3, "x1*y1 + x2*y2 = 0", "P^2 x P^2", "one node",
        "two small resolutions", true);
    rec("X_6_3_3_star", 6, 3, 3, "P^1 x P^1 x P^1", "P^7 (Segre embedding)", "smooth", "",
        true);

    rec("X_5_1_6", 5, 1, 6, "Gr(2,5)", "P^9 (Pluecker embedding)", "smooth", "", true);
    rec("X_5_1_5", 5, 1, 5, "x12 + x34 = 0", "Gr(2,5)", "smooth", "general linear section",
        false);
    rec("X_5_1_4", 5, 1, 4, "x12 + x34 = x23 + x45 = 0", "Gr(2,5)", "smooth",
        "general linear section", false);
    rec("X_5_1_3", 5, 1, 3, "x12 + x34 = x23 + x45 = x15 + x24 = 0", "Gr(2,5)", "smooth",
        "general linear section", false);
    rec("X_5_2_5", 5, 2, 5, "x12 = 0", "Gr(2,5)",
        "nodal along the plane <e34, e35, e45>", "a Schubert divisor", true);
    rec("X_5_2_4", 5, 2, 4, "x12 = x23 + x45 = 0", "Gr(2,5)",
        "nodal along the line <e34, e35>", "", false);
    rec("X_5_2_3", 5, 2, 3, "x12 = x23 + x45 = x13 + x24 + x35 = 0", "Gr(2,5)",
        "one node at [e34]", "", false);
    rec("X_5_3_4", 5, 3, 4, "x12 = x34 = 0", "Gr(2,5)",
        "nodal along two disjoint lines <e35, e45> and <e15, e25>",
        "intersection of two Schubert divisors", true);
    rec("X_5_3_3", 5, 3, 3, "x12 = x34 = x15 + x35 + x24 = 0", "Gr(2,5)",
        "two nodes at [e25] and [e45]", "", false);
    rec("X_5_4_3", 5, 4, 3, "x12 = x34 = x15 + x35 = 0", "Gr(2,5)",
        "three nodes at [e45], [e25], [e24]",
        "intersection of three Schubert divisors", true);

    rec("X_4_2_6", 4, 2, 6, "x1*x8 + x2*x6 + x3*x4 = x1*x5 + x2*x7 + x3*x9 = 0", "P^8",
        "P^1 x P^2: x1 = x2 = x3 = 0 and rk[[x8,x6,x4],[x5,x7,x9]] <= 1", "", true);
    rec("X_4_3_5", 4, 3, 5, "x1*x8 + x2*x6 + x3*x4 = x1*x5 + x2*x7 = 0", "P^7",
        "two planes <e4,e6,e8>, <e3,e6,e8> and the quadric "
        "{x1 = x2 = x3 = x4 = x5*x6 - x7*x8 = 0}",
        "hyperplane section x9 = 0 of X_4_2_6", true);
    rec("X_4_3_5_star", 4, 3, 5, "x2*x6 + x3*x4 = x1*x5 + x7*x8 = 0", "P^7",
        "the union of two quadric surfaces", "join of two quadric surfaces", true);
    rec("X_4_4_4", 4, 4, 4, "x2*x6 + x3*x4 = x1*x5 + x2*x7 = 0", "P^6",
        "union of 5 lines", "hyperplane section x8 = 0 of X_4_3_5", true);
    rec("X_4_5_3", 4, 5, 3, "x1*x5 = -x2*x6 = x3*x4", "P^5",
        "six points [e1]..[e6]", "tetrahedral quartic threefold (toric)", true);

    rec("X_3_2_7", 3, 2, 7, "det[[x9,x1,x2],[x4,x8,x3],[x5,x6,x7]] = 0", "P^8",
        "the Segre variety P^2 x P^2", "determinantal cubic", true);
    rec("X_3_3_6", 3, 3, 6, "det[[0,x1,x2],[x4,x8,x3],[x5,x6,x7]] = 0", "P^7",
        "the 3-space <e3,e6,e7,e8> and two cubic scrolls",
        "hyperplane section x9 = 0 of X_3_2_7", true);
    rec("X_3_4_5", 3, 4, 5, "det[[0,x1,x2],[x4,0,x3],[x5,x6,x7]] = 0", "P^6",
        "four planes and two quadric surfaces",
        "hyperplane section x8 = 0 of X_3_3_6", true);
    rec("X_3_5_4", 3, 5, 4, "det[[0,x1,x2],[x4,0,x3],[x5,x6,0]] = 0", "P^5",
        "nine lines <e_i, e_j>, i odd, j even", "Perazzo primal (toric)", true);
    rec("X_3_6_3", 3, 6, 3, "sum(x_i) = det[[0,x1,x2],[x4,0,x3],[x5,x6,0]] = 0", "P^5",
        "10 nodes", "the Segre cubic; it has 10 nodes", true);

    rec("X_2_2_8", 2, 2, 8, "y^2 = det[[0,x1,x2,x3],[x1,x9,x4,x5],[x2,x4,x8,x6],[x3,x5,x6,x7]]",
        "P(1^9,2)",
        "P^5 = <e4..e9> and a projection of the Segre variety P^2 x P^3", "", true);
    rec("X_2_3_7", 2, 3, 7, "y^2 = det[[0,x1,x2,x3],[x1,0,x4,x5],[x2,x4,x8,x6],[x3,x5,x6,x7]]",
        "P(1^8,2)",
        "two copies of P^4, a projection of P^1 x P^3 and a projection of P^2 x P^2",
        "hyperplane section x9 = 0 of X_2_2_8", true);
    rec("X_2_3_7_star", 2, 3, 7,
        "y^2 = x1^2*x8^2 + x2^2*x7^2 + x3^2*x6^2 + x4^2*x5^2 - 2*x1*x2*x7*x8 "
        "- 2*x1*x3*x6*x8 - 2*x1*x4*x5*x8 - 2*x2*x3*x6*x7 - 2*x2*x4*x5*x7 "
        "- 2*x3*x4*x5*x6 + 4*x1*x5*x6*x7 + 4*x2*x3*x4*x8",
        "P(1^8,2)", "three copies of P^1 x P^3",
        "double covering ramified over the Cayley hyperdeterminant", true);
    rec("X_2_4_6", 2, 4, 6, "y^2 = det[[0,x1,x2,x3],[x1,0,x4,x5],[x2,x4,0,x6],[x3,x5,x6,x7]]",
        "P(1^7,2)", "four copies of P^3 and three copies of P^1 x P^2",
        "hyperplane section x8 = 0 of X_2_3_7", true);
    rec("X_2_5_5", 2, 5, 5, "y^2 = det[[0,x1,x2,x3],[x1,0,x4,x5],[x2,x4,0,x6],[x3,x5,x6,0]]",
        "P(1^6,2)", "eight planes and three quadric surfaces",
        "hyperplane section x7 = 0 of X_2_4_6", true);
    rec("X_2_6_4", 2, 6, 4,
        "sum(x_i) = y^2 - det[[0,x1,x2,x3],[x1,0,x4,x5],[x2,x4,0,x6],[x3,x5,x6,0]] = 0",
        "P(1^6,2)", "the Cremona-Richmond configuration of 15 lines",
        "known as the Coble fourfold; the branch divisor is the Igusa quartic", true);
    rec("X_2_7_3", 2, 7, 3, "double covering of P^3 branched over a Kummer quartic surface",
        "P(1^4,2)", "16 nodes",
        "Kummer double solid; a 3-dimensional moduli family", true);
    return t;
  }();
  return records;
}

std::optional<VarietyRecord> catalog_lookup(const std::string& name) {
  for (const auto& r : variety_catalog())
    if (r.name == name) return r;
  return std::nullopt;
}

} // namespace delpezzo
