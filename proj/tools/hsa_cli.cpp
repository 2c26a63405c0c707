// hsa: structure-constants toolbox for graded Lie n-algebras, LWX 2-algebras
// and their doubles. Exit codes: 0 pass/success, 1 check failed, 2 bad input.

#include "hsa/format.hpp"
#include "hsa/gallery.hpp"
#include "hsa/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hsa::input_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spill(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw hsa::input_error("cannot open '" + path + "' for writing");
  out << text;
}

hsa::StructureFile load(const std::string& path) {
  try {
    return hsa::parse_structure(slurp(path));
  } catch (const hsa::parse_error& e) {
    throw hsa::input_error(path + ": " + e.what());
  }
}

int emit_report(const hsa::CheckReport& r, const std::string& format, double ms) {
  if (format == "json")
    std::cout << hsa::report_to_json(r, ms) << '\n';
  else
    std::cout << hsa::report_to_text(r);
  return r.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded Lie n-algebra and LWX 2-algebra toolbox"};
  app.require_subcommand(1);
  std::string report_format = "text";
  app.add_option("--report", report_format, "report format: text|json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* check = app.add_subcommand("check", "verify the axioms of a structure file");
  std::string check_path, src_path, tgt_path, cpx_path;
  check->add_option("file", check_path, "structure file")->required();
  check->add_option("--source", src_path, "source Lie 2-algebra (morphism checks)");
  check->add_option("--target", tgt_path, "target strict Lie 3-algebra (morphism checks)");
  check->add_option("--complex", cpx_path, "3-term complex (superconnection checks)");

  auto* build = app.add_subcommand("build", "run one construction");
  std::string build_op, build_in, build_out;
  build->add_option("op", build_op, "one of: end-complex higher-string double elwx derived-lie3 "
                                    "std-lwx bialgebra-double string-lie2 quad-lie2 embed-lie3 "
                                    "hom-lie2 abelian-double string-type")
      ->required();
  build->add_option("file", build_in, "input structure file")->required();
  build->add_option("-o,--output", build_out, "output file (default stdout)");

  auto* compare = app.add_subcommand("compare", "exact structural equality of two files");
  std::string cmp_a, cmp_b;
  compare->add_option("a", cmp_a)->required();
  compare->add_option("b", cmp_b)->required();

  auto* gallery = app.add_subcommand("gallery", "list or emit the shipped examples");
  std::string gal_verb, gal_name, gal_out;
  gallery->add_option("verb", gal_verb, "list | emit")->required();
  gallery->add_option("name", gal_name, "example name (for emit)");
  gallery->add_option("-o,--output", gal_out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) {
      hsa::StructureFile f = load(check_path);
      auto t0 = std::chrono::steady_clock::now();
      hsa::CheckReport r;
      if (f.kind == hsa::Kind::Morphism) {
        if (src_path.empty() || (tgt_path.empty() && cpx_path.empty()))
          throw hsa::input_error("morphism checks need --source and --target or --complex");
        hsa::StructureFile src = load(src_path);
        const auto& m = std::get<hsa::MorphismFile>(f.data);
        if (!tgt_path.empty()) {
          hsa::StructureFile tgt = load(tgt_path);
          r = hsa::check_morphism_file(m, src.lie(), tgt.lie());
        } else {
          hsa::StructureFile cpx = load(cpx_path);
          r = hsa::check_superconnection_file(m, src.lie(),
                                              std::get<hsa::ThreeTermComplex>(cpx.data));
        }
      } else {
        r = hsa::check_structure(f);
      }
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
      return emit_report(r, report_format, ms);
    }
    if (*build) {
      hsa::StructureFile in = load(build_in);
      try {
        hsa::StructureFile out = hsa::build_structure(build_op, in);
        spill(build_out, hsa::serialize_structure(out));
        return 0;
      } catch (const hsa::precondition_error& e) {
        std::cerr << "precondition failed: " << e.what() << '\n';
        return 1;
      }
    }
    if (*compare) {
      hsa::StructureFile a = load(cmp_a), b = load(cmp_b);
      if (hsa::serialize_structure(a) == hsa::serialize_structure(b)) return 0;
      std::cerr << "structures differ\n";
      return 1;
    }
    if (*gallery) {
      if (gal_verb == "list") {
        for (const auto& n : hsa::gallery_names()) std::cout << n << '\n';
        return 0;
      }
      if (gal_verb == "emit") {
        if (gal_name.empty()) throw hsa::input_error("gallery emit needs a name");
        spill(gal_out, hsa::gallery_emit(gal_name));
        return 0;
      }
      throw hsa::input_error("gallery verb must be list or emit");
    }
  } catch (const hsa::input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
