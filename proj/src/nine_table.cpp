#include "weylchi/nine_table.hpp"

#include "weylchi/chi.hpp"

namespace weylchi {

NineTable chi_nine_table(const Partition& mu, const Partition& lambda)
{
    const FactoredRational unit;
    const FactoredRational c1 = chi_closed(mu, lambda).value;
    const FactoredRational c2 = chi_closed(lambda, mu).value;

    NineTable t;
    // Ext vanishes in positive degrees from a Weyl to a dual Weyl module.
    t["V,H"] = unit;
    // Both arguments torsion.
    t["Q,Q"] = unit;
    t["V,V"] = c1;
    // Contravariant duality.
    t["H,H"] = c1;
    // chi(V(mu), -) on 0 -> V(lambda) -> H(lambda) -> Q(lambda) -> 0.
    t["V,Q"] = t["V,H"] * inv(c1);
    // chi(M, N) chi(N, M) = 1 for torsion M.
    t["Q,V"] = inv(t["V,Q"]);
    // chi(-, Q(lambda)) on 0 -> V(mu) -> H(mu) -> Q(mu) -> 0.
    t["H,Q"] = t["V,Q"] * t["Q,Q"];
    t["Q,H"] = inv(t["H,Q"]);
    // chi(-, V(lambda)) on the same sequence; chi(Q(mu), V(lambda)) is the
    // inverse of the V,Q entry of the swapped pair.
    const FactoredRational v_lambda_q_mu = unit * inv(c2);
    t["H,V"] = c1 * inv(v_lambda_q_mu);
    return t;
}

std::string nine_table_inconsistency(const Partition& mu, const Partition& lambda)
{
    const NineTable t = chi_nine_table(mu, lambda);
    const NineTable swapped = chi_nine_table(lambda, mu);
    const FactoredRational& c = t.at("V,V");

    auto link = [&](const char* name, const FactoredRational& got, const FactoredRational& want) {
        return got == want ? std::string{}
                           : std::string(name) + " = " + got.render() + ", expected " + want.render();
    };
    for (auto check : {link("V,H", t.at("V,H"), {}), link("Q,Q", t.at("Q,Q"), {}), link("H,H", t.at("H,H"), c),
                       link("1/(V,Q)", inv(t.at("V,Q")), c), link("Q,H", t.at("Q,H"), c),
                       link("1/(H,Q)", inv(t.at("H,Q")), c), link("Q,V", t.at("Q,V"), c),
                       link("H,V symmetry", t.at("H,V"), swapped.at("H,V")),
                       link("H,V product", t.at("H,V"), c * swapped.at("V,V"))}) {
        if (!check.empty())
            return check;
    }
    return {};
}

}  // namespace weylchi
