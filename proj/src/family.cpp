#include "cremona/family.hpp"

#include <sstream>

namespace cremona {

ValidationReport validate_corollary_input(const RatPoly& f) {
    ValidationReport report;
    if (f.is_zero()) {
        report.add("f_nonzero", false, "f vanishes identically");
        return report;
    }
    int deg = f.degree();
    report.add("degree_even_at_least_6", deg >= 6 && deg % 2 == 0,
               "deg f = " + std::to_string(deg));
    bool sf = is_squarefree(f);
    report.add("f_squarefree", sf, sf ? "" : "f has a multiple root");
    if (!sf)
        return report;
    int real = count_real_roots(f);
    report.add("at_least_4_real_roots", real >= 4,
               "real roots: " + std::to_string(real));
    if (report.valid) {
        unsigned comps = real_components(f * Rat(-4));
        report.add("branch_at_least_2_components", comps >= 2,
                   "components of w^2 = -4f: " + std::to_string(comps));
    }
    return report;
}

ConicBundleResult make_sab(const RatPoly& f, const Rat& a, const Rat& b) {
    if (!validate_corollary_input(f).valid)
        throw std::invalid_argument(
            "make_sab needs an f passing validate_corollary_input");
    RatPoly h = RatPoly::from_roots({a, b}) * Rat(-1);
    return mk_conic_bundle(RatPoly(1), RatPoly(), f, h);
}

CorollaryReport corollary_demo(const RatPoly& f,
                               const std::vector<std::pair<Rat, Rat>>& pairs) {
    CorollaryReport report;
    report.f = f;
    report.input_check = validate_corollary_input(f);
    report.caveat =
        "unverified hypothesis: the parameters (a, b) must keep the real locus "
        "of the surface connected (rationality over R); this tool does not "
        "check it";
    if (!report.input_check.valid)
        throw std::invalid_argument(
            "corollary_demo needs an f passing validate_corollary_input");

    std::vector<ConicBundleModel> models;
    std::vector<size_t> model_pair_index;
    for (const auto& [a, b] : pairs) {
        FamilyPair entry{a, b, false, "", sign(f(a)) < 0 || sign(f(b)) < 0};
        auto r = make_sab(f, a, b);
        if (r.model) {
            entry.valid = true;
            models.push_back(*r.model);
            model_pair_index.push_back(report.pairs.size());
        } else {
            std::ostringstream os;
            for (const auto& c : r.report.checks)
                if (!c.pass)
                    os << c.name << "; ";
            entry.detail = os.str();
        }
        report.pairs.push_back(std::move(entry));
    }
    report.valid_count = models.size();
    if (models.empty())
        throw EmptyDemoError("no valid (a, b) pair; nothing to compare");

    report.shared_curve = fixed_curve_cb(models.front());

    for (size_t i = 0; i < models.size(); ++i)
        for (size_t j = i + 1; j < models.size(); ++j) {
            Decision d = decide_equivalent(models[i], models[j]);
            report.comparisons.push_back(PairwiseCell{
                model_pair_index[i], model_pair_index[j], d.verdict,
                d.failed_condition});
            switch (d.verdict) {
            case Verdict::equivalent: ++report.equivalent_count; break;
            case Verdict::not_equivalent: ++report.not_equivalent_count; break;
            case Verdict::undecided: ++report.undecided_count; break;
            }
            const auto& p1 = report.pairs[model_pair_index[i]];
            const auto& p2 = report.pairs[model_pair_index[j]];
            bool same_rootset = (p1.a == p2.a && p1.b == p2.b) ||
                                (p1.a == p2.b && p1.b == p2.a);
            if (!same_rootset && d.verdict != Verdict::not_equivalent)
                report.all_distinct_rootsets_nonequivalent = false;
        }
    return report;
}

}
