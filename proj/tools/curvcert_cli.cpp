// Command-line front end: Finsler-Thorpe certification, curvature scans,
// Weitzenboeck property sweeps, boundary certificates, index arithmetic,
// and the example-metric zoo.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "curvcert/boundary.hpp"
#include "curvcert/exterior.hpp"
#include "curvcert/families.hpp"
#include "curvcert/json_io.hpp"
#include "curvcert/rng.hpp"
#include "curvcert/thorpe.hpp"
#include "curvcert/topology.hpp"
#include "curvcert/weitzenbock.hpp"

namespace {

using namespace curvcert;

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitInvalidInput = 2;

std::string fmt(double x) { return format_double(x); }

void printVec6(std::ostream& out, const Vec6& v) {
    out << "[";
    for (int i = 0; i < 6; ++i) out << fmt(v[i]) << (i < 5 ? ", " : "]");
}

int runFtCheck(const std::string& path, bool asJson) {
    const CurvatureOperator R = load_curvature_json(path);
    const SecNonnegCertificate cert = sec_nonneg(R);
    if (asJson) {
        std::cout << "{\n  \"feasible\": " << (cert.nonneg ? "true" : "false");
        if (cert.nonneg) {
            std::cout << ",\n  \"tauMin\": " << fmt(cert.interval.tauMin)
                      << ",\n  \"tauMax\": " << fmt(cert.interval.tauMax)
                      << ",\n  \"feasibleTau\": " << fmt(cert.feasibleTau)
                      << ",\n  \"strict\": " << (cert.interval.strict ? "true" : "false");
        } else {
            std::cout << ",\n  \"counterexampleSec\": " << fmt(cert.counterexampleValue)
                      << ",\n  \"counterexamplePlane\": ";
            printVec6(std::cout, cert.counterexample->sigma());
        }
        std::cout << "\n}\n";
    } else if (cert.nonneg) {
        std::cout << "feasible shift interval: [" << fmt(cert.interval.tauMin) << ", "
                  << fmt(cert.interval.tauMax) << "]\n"
                  << "feasible tau: " << fmt(cert.feasibleTau) << "\n"
                  << "strictly positive-definite shift exists: "
                  << (cert.interval.strict ? "yes" : "no") << "\n"
                  << "sec >= 0: certified\n";
    } else {
        std::cout << "no feasible shift: sec >= 0 fails\n"
                  << "counterexample plane (K coordinates): ";
        printVec6(std::cout, cert.counterexample->sigma());
        std::cout << "\nsectional curvature there: " << fmt(cert.counterexampleValue) << "\n";
    }
    return cert.nonneg ? kExitOk : kExitInfeasible;
}

int runSecScan(const std::string& path, int density, bool asJson) {
    const CurvatureOperator R = load_curvature_json(path);
    const SecScanResult r = sec_scan_bruteforce(R, density);
    if (asJson) {
        std::cout << "{\n  \"min\": " << fmt(r.minValue) << ",\n  \"max\": "
                  << fmt(r.maxValue) << ",\n  \"argmin\": ";
        printVec6(std::cout, r.argmin.sigma());
        std::cout << ",\n  \"argmax\": ";
        printVec6(std::cout, r.argmax.sigma());
        std::cout << "\n}\n";
    } else {
        std::cout << "sec min: " << fmt(r.minValue) << "\nsec max: " << fmt(r.maxValue)
                  << "\nargmin plane: ";
        printVec6(std::cout, r.argmin.sigma());
        std::cout << "\nargmax plane: ";
        printVec6(std::cout, r.argmax.sigma());
        std::cout << "\n";
    }
    return kExitOk;
}

CurvatureOperator randomBianchiOperator(Rng& rng) {
    RealMat s(6, 6);
    for (int i = 0; i < 6; ++i)
        for (int j = i; j < 6; ++j) s(i, j) = s(j, i) = rng.gaussian();
    return CurvatureOperator(CurvatureOperator::bianchiProject(s));
}

int runVerifyLemmas(int samples, std::uint64_t seed) {
    int fail = 0;
    double worstIdentity = 0, worstPsd = 0, worstStarPlus = 0, worstStarMinus = 0,
           worstTrace = 0;
    for (int k = 0; k < samples; ++k) {
        Rng rng = Rng::split(seed, static_cast<std::uint64_t>(k));
        const CurvatureOperator R = randomBianchiOperator(rng);
        const RealMat l = random_area_nonincreasing_map(rng, false);

        // Identity relating the curvature and Hodge-type terms.
        const double norm = std::max(1.0, R.matrix().frobenius() *
                                              std::pow(l.frobenius(), 4.0));
        const double res = check_rt_identity(R, l) / norm;
        worstIdentity = std::max(worstIdentity, res);
        if (res > 1e-9) ++fail;

        // PSD input gives a PSD Hodge-type term.
        RealMat g(6, 6);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) g(i, j) = rng.gaussian();
        const RealMat psd = g.transpose() * g;
        const double mePsd =
            min_eigenvalue(build_T_endo(psd, l).matrix) / std::max(1.0, psd.frobenius());
        worstPsd = std::min(worstPsd, mePsd);
        if (mePsd < -1e-9) ++fail;

        // Star input: positive on the ++ block, negative on the -- block.
        const auto starBlocks = chirality_blocks(build_T_endo(hodge_star(), l).matrix);
        const double sp = min_eigenvalue(starBlocks[0]);
        const double sm = -min_eigenvalue(starBlocks[3] * cplx(-1.0));  // max eig
        worstStarPlus = std::min(worstStarPlus, sp);
        worstStarMinus = std::max(worstStarMinus, sm);
        if (sp < -1e-9 || sm > 1e-9) ++fail;

        // Trace bound on operators with a feasible shift.
        const TauInterval iv = tau_interval(R);
        if (!iv.empty) {
            const TraceBound tb = trace_bound(R, l);
            worstTrace = std::min(worstTrace, tb.slack);
            if (tb.slack < -1e-9 * std::max(1.0, R.matrix().frobenius())) ++fail;
        }
    }
    std::cout << "samples: " << samples << "  seed: " << seed << "\n"
              << "identity residual (max, relative) : " << fmt(worstIdentity) << "\n"
              << "psd-input min eigenvalue (worst)  : " << fmt(worstPsd) << "\n"
              << "star ++ block min eig (worst)     : " << fmt(worstStarPlus) << "\n"
              << "star -- block max eig (worst)     : " << fmt(worstStarMinus) << "\n"
              << "trace-bound slack (worst)         : " << fmt(worstTrace) << "\n"
              << "failures: " << fail << "\n";
    return fail == 0 ? kExitOk : kExitInfeasible;
}

int runExtremalCert(const std::string& path, bool asJson) {
    const ExtremalPointData d = load_extremal_json(path);
    const ExtremalityReport rep = extremality_certificate(d.R_M, d.tau, d.scal_N, d.l);
    const bool pass = rep.scalInequalityHolds && rep.weitzenboeckGap >= -1e-9;
    if (asJson) {
        std::cout << "{\n  \"areaNonincreasing\": "
                  << (rep.areaNonincreasing ? "true" : "false")
                  << ",\n  \"scalInequalityHolds\": "
                  << (rep.scalInequalityHolds ? "true" : "false")
                  << ",\n  \"traceSlack\": " << fmt(rep.traceSlack)
                  << ",\n  \"tShiftedMin\": " << fmt(rep.tShiftedMin)
                  << ",\n  \"tStarTermMin\": " << fmt(rep.tStarTermMin)
                  << ",\n  \"tPsdMin\": " << fmt(rep.tPsdMin)
                  << ",\n  \"weitzenboeckGap\": " << fmt(rep.weitzenboeckGap)
                  << ",\n  \"rigidity\": " << (rep.rigidityFlag ? "true" : "false")
                  << ",\n  \"pass\": " << (pass ? "true" : "false") << "\n}\n";
    } else {
        std::cout << "competitor area-nonincreasing : "
                  << (rep.areaNonincreasing ? "yes" : "no") << "\n"
                  << "scalar inequality scal_N >= scal_M : "
                  << (rep.scalInequalityHolds ? "holds" : "VIOLATED") << "\n"
                  << "trace-bound slack             : " << fmt(rep.traceSlack) << "\n"
                  << "shifted Hodge term min eig ++ : " << fmt(rep.tShiftedMin) << "\n"
                  << "star term min eig ++          : " << fmt(rep.tStarTermMin) << "\n"
                  << "Hodge term min eig ++         : " << fmt(rep.tPsdMin) << "\n"
                  << "Weitzenboeck gap              : " << fmt(rep.weitzenboeckGap) << "\n"
                  << "rigidity (gap ~ 0)            : " << (rep.rigidityFlag ? "yes" : "no")
                  << "\ncertificate                   : " << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? kExitOk : kExitInfeasible;
}

int runBoundaryCert(const std::string& path, bool asJson) {
    const BoundaryData bd = load_boundary_json(path);
    const CurvatureOperator q = build_Q(bd);
    const auto eig = sym_eigen(q.matrix());
    const double traceDiff = q.matrix().trace() - bd.secondFundamentalForm.trace();
    double bound;
    bool hypothesisOk = true;
    try {
        bound = mean_curvature_bound(bd);
    } catch (const std::invalid_argument&) {
        hypothesisOk = false;
        bound = mean_curvature_bound(bd, /*enforceConvexity=*/false);
    }
    const bool pass = hypothesisOk && bound >= -1e-9 * (1.0 + bd.secondFundamentalForm.frobenius());
    if (asJson) {
        std::cout << "{\n  \"qSpectrum\": [";
        for (int i = 0; i < 6; ++i) std::cout << fmt(eig.values[i]) << (i < 5 ? ", " : "]");
        std::cout << ",\n  \"traceIdentityResidual\": " << fmt(traceDiff)
                  << ",\n  \"convex\": " << (hypothesisOk ? "true" : "false")
                  << ",\n  \"boundMinEig\": " << fmt(bound)
                  << ",\n  \"pass\": " << (pass ? "true" : "false") << "\n}\n";
    } else {
        std::cout << "Q spectrum: [";
        for (int i = 0; i < 6; ++i) std::cout << fmt(eig.values[i]) << (i < 5 ? ", " : "]\n");
        std::cout << "trace(Q) - trace(II): " << fmt(traceDiff) << "\n"
                  << "boundary convex (II >= 0): " << (hypothesisOk ? "yes" : "NO") << "\n"
                  << "mean-curvature bound min eig: " << fmt(bound) << "\n"
                  << "certificate: " << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? kExitOk : kExitInfeasible;
}

int runIndex(bool boundaryCase, const TopologyData& t) {
    const IndexResult r = boundaryCase ? index_boundary(t) : index_closed(t);
    const ClassPredicates p = class_predicates(t);
    std::cout << "index = " << r.value.str() << "\n";
    if (r.nonIntegerWarning)
        std::cout << "warning: non-integer index; check the signature convention "
                     "of the input data\n";
    std::cout << "class membership:\n"
              << "  degree-d competitors        : " << (p.c0 ? "yes" : "no") << "\n"
              << "  self-maps of nonzero degree : " << (p.c0Self ? "yes" : "no") << "\n"
              << "  boundary competitors        : " << (p.cBoundary ? "yes" : "no") << "\n"
              << "  local (small signature)     : " << (p.cLocal ? "yes" : "no") << "\n";
    return kExitOk;
}

int runZoo(const std::string& name, const std::string& outPath) {
    MetricPointData d =
        name == "fubini-study"     ? fubini_study()
        : name == "round-sphere"   ? round_sphere(1.0)
        : name == "product-spheres" ? product_spheres(1.0, 1.0)
        : name == "gz-plateau"
            ? gz_curvature_at(gz_profile(10.0, 12.0), 12.0)
            : throw CLI::ValidationError(
                  "zoo", "unknown metric '" + name +
                             "' (try fubini-study, round-sphere, product-spheres, "
                             "gz-plateau)");
    const std::string doc = curvature_to_json(d.R, d.label);
    if (outPath.empty()) {
        std::cout << doc;
    } else {
        std::ofstream out(outPath);
        if (!out) throw std::runtime_error("cannot open output file: " + outPath);
        out << doc;
    }
    return kExitOk;
}

int runCheeger(double r0, double rmax, int samples, const std::string& csvPath) {
    const GZProfile prof = gz_profile(r0, rmax);
    std::ostringstream csv;
    csv << "r,phi,tau,scal,ric0,ric1,ric2,ric3,ft_feasible\n";
    double tauMax = -1e300, tauMin = 1e300;
    bool allFeasible = true;
    const double neckLo = prof.r0(), neckHi = 2 * prof.rmax() - prof.r0();
    bool neckTauZero = true;
    for (int i = 0; i <= samples; ++i) {
        const double r = 2 * prof.rmax() * i / samples;
        const MetricPointData d = cheeger_glued(prof, r);
        tauMax = std::max(tauMax, d.tau);
        tauMin = std::min(tauMin, d.tau);
        if (r >= neckLo && r <= neckHi && d.tau != 0.0) neckTauZero = false;
        const bool feasible = star_shift_min_eig(d.R, d.tau) >=
                              -1e-9 * std::max(1.0, d.R.matrix().frobenius());
        allFeasible = allFeasible && feasible;
        csv << fmt(r) << "," << fmt(prof.phi(std::min(r, 2 * prof.rmax() - r))) << ","
            << fmt(d.tau) << "," << fmt(d.scal);
        for (int k = 0; k < 4; ++k) csv << "," << fmt(d.ric(k, k));
        csv << "," << (feasible ? 1 : 0) << "\n";
    }
    if (!csvPath.empty()) {
        std::ofstream out(csvPath);
        if (!out) throw std::runtime_error("cannot open output file: " + csvPath);
        out << csv.str();
    }
    std::cout << "plateau value b: " << fmt(prof.b()) << "\n"
              << "neck region: [" << fmt(neckLo) << ", " << fmt(neckHi) << "]\n"
              << "tau range over sweep: [" << fmt(tauMin) << ", " << fmt(tauMax) << "]\n"
              << "tau == 0 on the neck: " << (neckTauZero ? "yes" : "no") << "\n"
              << "shifted operator PSD everywhere: " << (allFeasible ? "yes" : "no") << "\n";
    return allFeasible && neckTauZero && tauMax <= 1e-12 ? kExitOk : kExitInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pointwise curvature certificates for 4-manifolds"};
    app.require_subcommand(1);

    std::string inputPath, zooName, outPath, csvPath;
    bool asJson = false, idxClosed = false, idxBoundary = false;
    int density = 100, samples = 500, cheegerSamples = 200;
    std::uint64_t seed = 0;
    double r0 = 10.0, rmax = 12.0;
    TopologyData topo;

    auto* ft = app.add_subcommand("ft-check", "Certify sec >= 0 via a star shift");
    ft->add_option("input", inputPath, "curvature operator json")->required();
    ft->add_flag("--json", asJson, "json output");

    auto* scan = app.add_subcommand("sec-scan", "Brute-force sectional curvature range");
    scan->add_option("input", inputPath, "curvature operator json")->required();
    scan->add_option("--density", density, "grid points per sphere factor");
    scan->add_flag("--json", asJson, "json output");

    auto* lemmas = app.add_subcommand("verify-lemmas", "Property sweep over random data");
    lemmas->add_option("--samples", samples, "number of random samples");
    lemmas->add_option("--seed", seed, "base seed");

    auto* cert = app.add_subcommand("extremal-cert", "Pointwise extremality certificate");
    cert->add_option("input", inputPath, "point data json")->required();
    cert->add_flag("--json", asJson, "json output");

    auto* bcert = app.add_subcommand("boundary-cert", "Boundary mean-curvature bound");
    bcert->add_option("input", inputPath, "boundary data json")->required();
    bcert->add_flag("--json", asJson, "json output");

    auto* idx = app.add_subcommand("index", "Index and competitor-class arithmetic");
    idx->add_flag("--closed", idxClosed, "closed-manifold formula");
    idx->add_flag("--boundary", idxBoundary, "boundary formula");
    idx->add_option("--chiM", topo.eulerM)->required();
    idx->add_option("--sigmaM", topo.sigmaM)->required();
    idx->add_option("--sigmaN", topo.sigmaN)->required();
    idx->add_option("--deg", topo.degF)->required();
    idx->add_option("--b0dM", topo.b0dM);
    idx->add_option("--b2dM", topo.b2dM);
    idx->add_option("--b2M", topo.b2M);

    auto* zoo = app.add_subcommand("zoo", "Emit a curvature operator for an example metric");
    zoo->add_option("name", zooName, "metric name")->required();
    zoo->add_option("--out", outPath, "output file (default stdout)");

    auto* cheeger = app.add_subcommand("cheeger", "Sweep of the glued cohomogeneity-one metric");
    cheeger->add_option("--r0", r0, "plateau start");
    cheeger->add_option("--rmax", rmax, "half-length of the glued parameter range");
    cheeger->add_option("--samples", cheegerSamples, "sweep resolution");
    cheeger->add_option("--csv", csvPath, "write per-radius data as csv");

    CLI11_PARSE(app, argc, argv);

    try {
        if (ft->parsed()) return runFtCheck(inputPath, asJson);
        if (scan->parsed()) return runSecScan(inputPath, density, asJson);
        if (lemmas->parsed()) return runVerifyLemmas(samples, seed);
        if (cert->parsed()) return runExtremalCert(inputPath, asJson);
        if (bcert->parsed()) return runBoundaryCert(inputPath, asJson);
        if (idx->parsed()) {
            if (idxClosed == idxBoundary) {
                std::cerr << "error: pass exactly one of --closed / --boundary\n";
                return kExitInvalidInput;
            }
            return runIndex(idxBoundary, topo);
        }
        if (zoo->parsed()) return runZoo(zooName, outPath);
        if (cheeger->parsed()) return runCheeger(r0, rmax, cheegerSamples, csvPath);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
