#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mumford2/io.hpp"

namespace py = pybind11;
using namespace mumford2;

namespace {

std::string rat_str(const Rat& r) { return format_rat(r); }

py::dict skeleton_dict(const MetricSkeleton& s) {
    py::dict d;
    d["kind"] = to_string(s.kind);
    d["L1"] = rat_str(s.L1);
    d["L2"] = rat_str(s.L2);
    d["ell"] = rat_str(s.ell);
    return d;
}

py::dict period_dict(const PeriodMatrix& q) {
    py::dict d;
    d["log_q11"] = rat_str(q.q11);
    d["log_q12"] = rat_str(q.q12);
    d["log_q22"] = rat_str(q.q22);
    return d;
}

py::list point_list(const std::vector<Rat>& v) {
    py::list out;
    for (const Rat& x : v) out.append(rat_str(x));
    return out;
}

py::dict curve_dict(const TropicalCurve& tc, const FaithfulnessReport& rep) {
    py::dict d;
    d["dim"] = tc.dim;
    py::list verts;
    for (const auto& v : tc.vertices) {
        py::dict vd;
        vd["label"] = v.label;
        vd["point"] = point_list(v.pt);
        verts.append(vd);
    }
    d["vertices"] = verts;
    py::list segs;
    for (const auto& s : tc.segments) {
        py::dict sd;
        sd["label"] = s.label;
        sd["tail"] = s.a;
        sd["head"] = s.b;
        sd["length"] = rat_str(s.length);
        py::list slope;
        for (const auto& x : s.slope) slope.append(x.str());
        sd["slope"] = slope;
        sd["skeleton"] = s.skeleton;
        segs.append(sd);
    }
    d["segments"] = segs;
    py::list rays;
    for (const auto& r : tc.rays) {
        py::dict rd;
        rd["label"] = r.label;
        rd["base"] = r.base;
        py::list dir;
        for (const auto& x : r.dir) dir.append(x.str());
        rd["dir"] = dir;
        rays.append(rd);
    }
    d["rays"] = rays;
    d["skeleton_faithful"] = rep.skeleton_faithful;
    d["extended_faithful"] = rep.extended_faithful;
    py::list crossings;
    for (const auto& c : rep.crossings) {
        py::dict cd;
        cd["point"] = point_list(c.point);
        cd["pieces"] = py::make_tuple(c.piece1, c.piece2);
        crossings.append(cd);
    }
    d["crossings"] = crossings;
    return d;
}

}  // namespace

PYBIND11_MODULE(_mumford2, m) {
    m.doc() = "exact tropicalization of genus-2 Mumford curves";

    // translators run newest-first, so the base class goes first
    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<PrecisionError>(m, "PrecisionError",
                                           PyExc_ArithmeticError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("parse", [](const std::string& s) {
        return format_puiseux(parse_puiseux(s));
    }, "Parse a series and return its canonical form.");

    m.def("log_abs", [](const std::string& s) -> py::object {
        LogAbs v = log_abs(parse_puiseux(s));
        if (!v) return py::none();
        return py::str(rat_str(*v));
    }, "Valuation-based log|x| of a series; None for zero.");

    m.def("classify", [](const std::string& json_text) {
        Instance inst = parse_instance(json_text);
        Classified c = classify(inst.group);
        py::dict d;
        d["skeleton"] = skeleton_dict(c.skel);
        d["period_matrix"] = period_dict(c.q);
        return d;
    }, "Skeleton type and period matrix of an instance (JSON text).");

    m.def("tropicalize", [](const std::string& json_text, int dim) {
        if (dim != 2 && dim != 3)
            throw Error("dimension must be 2 or 3");
        Instance inst = parse_instance(json_text);
        TropOptions opts;
        opts.grid_step = inst.options.grid_step;
        opts.join_edges = inst.options.join_edges;
        TropResult r = tropicalize(inst.group, opts);
        py::dict d;
        d["skeleton"] = skeleton_dict(r.skel);
        d["period_matrix"] = period_dict(r.q);
        d["curve"] = curve_dict(dim == 3 ? r.curve3 : r.curve2,
                                dim == 3 ? r.report3 : r.report2);
        py::list warnings;
        for (const auto& w : r.warnings) warnings.append(w);
        d["warnings"] = warnings;
        return d;
    }, py::arg("json_text"), py::arg("dim") = 2,
       "Tropicalize an instance into dimension 2 or 3.");

    m.def("verify", [](const std::string& json_text, int words,
                       const std::string& grid_step) {
        Instance inst = parse_instance(json_text);
        VerifyOutcome out = run_verify(inst, words, parse_rat(grid_step));
        py::dict d;
        d["ok"] = out.ok;
        d["report"] = out.report;
        return d;
    }, py::arg("json_text"), py::arg("words") = 3,
       py::arg("grid_step") = "1/16", "Run the oracle suite on an instance.");
}
