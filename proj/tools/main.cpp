#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mcbc/bounds.hpp"
#include "mcbc/constructions.hpp"
#include "mcbc/errors.hpp"
#include "mcbc/exhaustive.hpp"
#include "mcbc/json_io.hpp"
#include "mcbc/search.hpp"
#include "mcbc/verify.hpp"

namespace {

// Exit codes: 0 ok/valid, 1 invalid or infeasible, 2 flag/input errors,
// 3 construction precondition failure, 4 enumeration cap exceeded.
constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitCap = 4;

struct ConstructArgs {
  std::string method;
  int n = 0, k = 0, m = 0, r = 0, q = 0, w = 0;
};

int run_construct(const ConstructArgs& a) {
  mcbc::McbcCode code;
  if (a.method == "replication") {
    code = mcbc::construct_replication(a.n, a.k, a.m, a.r);
  } else if (a.method == "small-n") {
    code = mcbc::construct_small_n_distinct(a.n, a.k, a.m);
  } else if (a.method == "cwc-gs") {
    const int w = a.w > 0 ? a.w : std::max(a.r, a.k - 2);
    auto gs = mcbc::graham_sloane_cwc(a.m, w);
    if (a.n < 1) throw mcbc::ParamError("cwc-gs needs n >= 1");
    if (a.n > gs.size())
      throw mcbc::ParamError("constant weight code has only " +
                             std::to_string(gs.size()) + " codewords");
    gs.supports.resize(a.n);
    code = mcbc::construct_from_cwc(
        mcbc::ConstantWeightCode(a.m, w, 4, std::move(gs.supports)), a.k, a.r);
  } else if (a.method == "distance4") {
    code = mcbc::construct_distance4(a.n, a.k, a.m, a.r);
  } else if (a.method == "diagonal") {
    code = mcbc::construct_diagonal(a.n, a.k, a.r);
  } else if (a.method == "steiner-affine") {
    code = mcbc::steiner_to_mcbc(mcbc::affine_plane(a.q), a.k, a.r);
  } else if (a.method == "regular") {
    code = mcbc::construct_regular(a.n, a.k, a.m);
  } else {
    std::cerr << "unknown method '" << a.method << "'\n";
    return kExitUsage;
  }
  std::cout << mcbc::code_to_json(code) << "\n";
  std::cerr << "n=" << code.n << " m=" << code.m << " N=" << code.total_storage
            << " k=" << a.k << " r=" << (a.method == "regular" ? a.k : a.r) << "\n";
  return kExitValid;
}

void print_profile_report(const mcbc::McbcCode& code, int k, int r) {
  auto profile = mcbc::block_profile(code.item_view, k);
  std::cout << "profile:";
  for (size_t i = 0; i < profile.counts.size(); ++i)
    if (profile.counts[i] > 0)
      std::cout << " A_" << i << "=" << profile.counts[i];
  if (profile.oversize > 0) std::cout << " oversize=" << profile.oversize;
  std::cout << "\n";
  if (r <= k - 1)
    std::cout << "profile-inequality: "
              << (mcbc::profile_inequality_check(profile, k, code.m, r) ? "holds"
                                                                        : "violated")
              << "\n";
}

int run_verify(const std::string& path, int k, int r, int t,
               const std::string& mode, unsigned long long cap) {
  if (mode != "hall" && mode != "exhaustive") {
    std::cerr << "mode must be hall or exhaustive\n";
    return kExitUsage;
  }
  if (mode == "hall" && t != 1) {
    std::cerr << "hall mode requires t=1\n";
    return kExitUsage;
  }
  mcbc::McbcCode code = mcbc::load_code_file(path);
  mcbc::VerificationResult res;
  if (mode == "hall")
    res = mcbc::verify_multiset_hall(code.item_view, k, r);
  else
    res = mcbc::verify_exhaustive(code, k, r, t, cap);
  print_profile_report(code, k, r);
  if (res.valid) {
    std::cout << "valid\n";
    return kExitValid;
  }
  std::cout << "invalid\n";
  if (res.witness_blocks) {
    std::cout << "blocks:";
    for (int idx : *res.witness_blocks) std::cout << " " << idx;
    std::cout << "\n";
  }
  if (res.witness_request)
    std::cout << "request: " << res.witness_request->to_string() << "\n";
  return kExitInvalid;
}

int run_serve(const std::string& path, const std::string& request, int t,
              std::optional<int> k, std::optional<int> r) {
  mcbc::McbcCode code = mcbc::load_code_file(path);
  auto req = mcbc::MultisetRequest::parse(request);
  if (k && r)
    req.validate(code.n, *k, *r);
  else
    req.validate_items(code.n);
  auto assignment = mcbc::serve_request(code, req, t);
  if (!assignment) {
    std::cout << "INFEASIBLE\n";
    return kExitInvalid;
  }
  for (int j = 0; j < code.m; ++j) {
    const auto& reads = assignment->reads[j];
    if (reads.empty()) continue;
    std::cout << "server " << (j + 1) << ":";
    for (int item : reads) std::cout << " " << item;
    std::cout << "\n";
  }
  return kExitValid;
}

int run_bounds(int n, int k, int m, int r, bool search, int search_cap,
               const std::string& witness_out) {
  mcbc::BoundsReport rep = mcbc::lower_bounds(n, k, m, r);
  if (!rep.known_exact) rep.known_exact = mcbc::known_exact_N(n, k, m, r);
  rep.construction_upper = mcbc::construction_upper(n, k, m, r);
  if (search) {
    mcbc::SearchCaps caps{search_cap, search_cap, search_cap};
    auto found = mcbc::exhaustive_optimal_N(n, k, m, r, caps);
    if (found) {
      rep.search_exact = found->optimal_storage;
      if (!witness_out.empty()) {
        std::ofstream out(witness_out);
        if (!out) throw mcbc::ParamError("cannot write witness file " + witness_out);
        out << mcbc::code_to_json(found->witness) << "\n";
      }
    }
  }
  std::cout << mcbc::bounds_report_to_json(rep) << "\n";
  return kExitValid;
}

int run_table(int k, int m, int r, int n_from, int n_to) {
  if (n_from > n_to || n_from < 1) {
    std::cerr << "empty or invalid range\n";
    return kExitUsage;
  }
  std::cout << "n\tlower\texact\tupper\n";
  for (int n = n_from; n <= n_to; ++n) {
    std::cout << n << "\t";
    try {
      mcbc::BoundsReport rep = mcbc::lower_bounds(n, k, m, r);
      std::cout << rep.best_lower() << "\t";
      auto exact = rep.known_exact ? rep.known_exact : mcbc::known_exact_N(n, k, m, r);
      if (exact)
        std::cout << exact->value << "\t";
      else
        std::cout << "-\t";
      auto upper = mcbc::construction_upper(n, k, m, r);
      if (upper)
        std::cout << upper->value << "\n";
      else
        std::cout << "-\n";
    } catch (const mcbc::ParamError&) {
      std::cout << "-\t-\t-\n";
    }
  }
  return kExitValid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multiset combinatorial batch codes: construct, verify, serve, bound"};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "emit a code as JSON");
  construct->add_option("--method", ca.method,
                        "replication|small-n|cwc-gs|distance4|diagonal|"
                        "steiner-affine|regular")
      ->required();
  construct->add_option("--n", ca.n, "number of items");
  construct->add_option("--k", ca.k, "request size")->required();
  construct->add_option("--m", ca.m, "number of servers");
  construct->add_option("--r", ca.r, "maximum multiplicity");
  construct->add_option("--q", ca.q, "affine plane order");
  construct->add_option("--w", ca.w, "codeword weight (cwc-gs only)");

  std::string code_path, mode = "hall";
  int vk = 0, vr = 1, vt = 1;
  unsigned long long cap = mcbc::kDefaultRequestCap;
  auto* verify = app.add_subcommand("verify", "check a code file");
  verify->add_option("code", code_path, "code JSON file")->required();
  verify->add_option("--k", vk, "request size")->required();
  verify->add_option("--r", vr, "maximum multiplicity");
  verify->add_option("--t", vt, "per-server budget");
  verify->add_option("--mode", mode, "hall|exhaustive");
  verify->add_option("--cap", cap, "request enumeration cap");

  std::string serve_path, request;
  int st = 1;
  std::optional<int> sk, sr;
  auto* serve = app.add_subcommand("serve", "serve a multiset request");
  serve->add_option("code", serve_path, "code JSON file")->required();
  serve->add_option("request", request, "comma-separated items, e.g. 3,3,4,4,5")
      ->required();
  serve->add_option("--t", st, "per-server budget");
  serve->add_option("--k", sk, "request size limit");
  serve->add_option("--r", sr, "multiplicity limit");

  int bn = 0, bk = 0, bm = 0, br = 1, search_cap = 5;
  bool do_search = false;
  std::string witness_out;
  auto* bounds = app.add_subcommand("bounds", "report bounds and exact values");
  bounds->add_option("--n", bn)->required();
  bounds->add_option("--k", bk)->required();
  bounds->add_option("--m", bm)->required();
  bounds->add_option("--r", br)->required();
  bounds->add_flag("--search", do_search, "run the exhaustive optimum search");
  bounds->add_option("--search-cap", search_cap, "cap on n, m, k for --search");
  bounds->add_option("--witness-out", witness_out, "write the search witness here");

  int tk = 0, tm = 0, tr = 1, n_from = 0, n_to = 0;
  auto* table = app.add_subcommand("table", "TSV of lower/exact/upper per n");
  table->add_option("--k", tk)->required();
  table->add_option("--m", tm)->required();
  table->add_option("--r", tr)->required();
  table->add_option("--n-from", n_from)->required();
  table->add_option("--n-to", n_to)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (construct->parsed()) return run_construct(ca);
    if (verify->parsed()) return run_verify(code_path, vk, vr, vt, mode, cap);
    if (serve->parsed()) return run_serve(serve_path, request, st, sk, sr);
    if (bounds->parsed())
      return run_bounds(bn, bk, bm, br, do_search, search_cap, witness_out);
    if (table->parsed()) return run_table(tk, tm, tr, n_from, n_to);
  } catch (const mcbc::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const mcbc::ParamError& e) {
    std::cerr << "error: " << e.what() << "\n";
    // Parameter problems inside `construct` signal precondition failures;
    // elsewhere they are input errors.
    return construct->parsed() ? kExitPrecondition : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
