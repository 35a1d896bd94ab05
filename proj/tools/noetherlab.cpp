// Command-line front end: davenport, noether, classify, bounds, catalog
// and verify subcommands over the noetherlab library.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "noetherlab/acceptance.hpp"
#include "noetherlab/bounds.hpp"
#include "noetherlab/cache.hpp"
#include "noetherlab/io.hpp"
#include "noetherlab/version.hpp"

using namespace nlab;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // internal invariant violation / failed checks
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

void emit(const Json& payload, const std::string& format) {
  if (format == "json") {
    std::cout << payload.dump(2) << "\n";
  } else if (format == "csv") {
    // flat records only: one header line and one value line
    std::string header, row;
    for (auto it = payload.begin(); it != payload.end(); ++it) {
      if (!header.empty()) {
        header += ",";
        row += ",";
      }
      header += it.key();
      row += it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
    }
    std::cout << header << "\n" << row << "\n";
  } else {
    for (auto it = payload.begin(); it != payload.end(); ++it)
      std::cout << it.key() << ": "
                << (it.value().is_string() ? it.value().get<std::string>()
                                           : it.value().dump())
                << "\n";
  }
}

/// Abelian group from a literal, or from a permutation group file whose
/// group identifies as abelian.
AbelianGroupPtr abelian_from_spec(const std::string& spec) {
  try {
    return parse_group_literal(spec);
  } catch (const input_error&) {
  }
  PermGroup G = load_group(spec);
  auto named = identify(G);
  if (named.cls != GroupClass::Trivial && named.cls != GroupClass::Cyclic &&
      named.cls != GroupClass::Abelian)
    throw input_error("davenport requires an abelian group, got " + named.name);
  return make_group(named.params);
}

Json run_davenport(const std::string& group, long k, const SearchBudget& budget, int threads) {
  auto A = abelian_from_spec(group);
  auto r = davenport_k(A, k, budget, threads);
  Json out;
  out["group"] = A->name();
  out["k"] = k;
  out["value"] = r.value;
  out["witness_sequence"] = sequence_to_json(r.witness);
  out["witness_pretty"] = r.witness.str();
  out["nodes_expanded"] = r.nodes;
  out["wall_ms"] = r.wall_ms;
  return out;
}

Json run_noether(const std::string& rep_path, long k, long cap) {
  MonomialRep rep = load_rep(rep_path);
  if (cap <= 0) cap = k * rep.group_order();
  InvariantEngine eng(rep);
  auto t0 = std::chrono::steady_clock::now();
  auto scan = eng.beta_k_of_module(k, cap);
  Json out;
  out["rep"] = rep_path;
  out["group"] = rep.group()->name() + ":Z" + std::to_string(rep.quotient_order());
  out["k"] = k;
  out["cap"] = cap;
  out["beta"] = scan.value;
  out["witness_degree"] = scan.witness_degree;
  out["generator_degrees"] = scan.generator_degrees;
  out["cap_theoretically_sufficient"] = scan.cap_theoretically_sufficient;
  out["r_dims"] = scan.r_dims;
  out["wall_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

Json fact_to_json(const FactPtr& f) {
  Json j;
  j["subject"] = f->subject;
  j["k"] = f->k;
  j["dir"] = f->dir == BoundDir::Upper ? "upper" : "lower";
  j["value"] = f->value;
  j["rule"] = f->rule;
  if (!f->note.empty()) j["note"] = f->note;
  if (!f->premises.empty()) {
    Json prem = Json::array();
    for (const auto& p : f->premises) prem.push_back(fact_to_json(p));
    j["premises"] = prem;
  }
  return j;
}

int cmd_verify(const std::string& tier, const std::string& format, unsigned seed) {
  auto results = run_acceptance(tier == "full", seed);
  long failures = 0;
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& r : results) {
      Json j;
      j["criterion"] = r.id;
      j["name"] = r.name;
      j["pass"] = r.pass;
      j["detail"] = r.detail;
      j["wall_ms"] = r.wall_ms;
      arr.push_back(j);
      if (!r.pass) ++failures;
    }
    Json out;
    out["tier"] = tier;
    out["seed"] = seed;
    out["results"] = arr;
    out["failures"] = failures;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      if (!r.pass) ++failures;
      std::printf("%s criterion %2d: %-28s %s (%.0f ms)\n", r.pass ? "PASS" : "FAIL", r.id,
                  r.name.c_str(), r.detail.c_str(), r.wall_ms);
    }
    std::printf("%zu/%zu criteria passed (tier %s, seed %u)\n", results.size() - failures,
                results.size(), tier.c_str(), seed);
  }
  return failures ? kExitFailure : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"noetherlab: exact Noether numbers, Davenport constants and the half-order "
               "group classification"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string group, rep_path, format = "json", cache_dir, tier = "fast";
  long k = 1, cap = 0, order_max = 32, depth = 4;
  unsigned seed = 20240917;
  int threads = 1;
  SearchBudget budget;
  bool with_external = false, with_classify = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--emit", format, "output format: json|csv|text");
    sub->add_option("--cache-dir", cache_dir, "result cache directory");
    sub->add_option("--threads", threads, "worker threads for the root-parallel searches");
  };

  auto* dav = app.add_subcommand("davenport", "generalized Davenport constants D_k(A)");
  dav->add_option("--group", group, "abelian group literal (Z3xZ3) or group file")->required();
  dav->add_option("--k", k, "number of zero-sum parts");
  dav->add_option("--nodes", budget.node_cap, "search node cap");
  dav->add_option("--wall-ms", budget.wall_ms_cap, "search wall-clock cap (ms)");
  add_common(dav);

  auto* noe = app.add_subcommand("noether", "beta_k of a monomial representation");
  noe->add_option("--rep", rep_path, "representation spec file (JSON)")->required();
  noe->add_option("--k", k, "power of the maximal invariant ideal");
  noe->add_option("--cap", cap, "degree cap (default k * |G|)");
  add_common(noe);

  auto* cls = app.add_subcommand("classify", "ten-case structure classification");
  cls->add_option("--group", group, "group file (JSON) or abelian literal")->required();
  add_common(cls);

  auto* bnd = app.add_subcommand("bounds", "certified upper/lower bounds on beta_k");
  bnd->add_option("--group", group, "group file (JSON) or abelian literal")->required();
  bnd->add_option("--k", k, "index of the generalized Noether number");
  bnd->add_option("--depth", depth, "structural rule depth");
  bnd->add_flag("--external", with_external, "also use external-source table rows");
  add_common(bnd);

  auto* cat = app.add_subcommand("catalog", "constructed small-group catalog");
  cat->add_option("--order-max", order_max, "largest group order");
  cat->add_flag("--classify", with_classify, "include structure case tags");
  add_common(cat);

  auto* ver = app.add_subcommand("verify", "run the verification suite");
  ver->add_option("--tier", tier, "fast|full");
  ver->add_option("--seed", seed, "seed for the sampled checks");
  std::string verify_format = "text";
  ver->add_option("--emit", verify_format, "output format: json|text");

  CLI11_PARSE(app, argc, argv);

  try {
    if (dav->parsed() || noe->parsed()) {
      ResultCache cache(cache_dir);
      std::string key = std::string(kVersion) + "|" +
                        (dav->parsed()
                             ? "davenport|" + group + "|k=" + std::to_string(k) + "|nodes=" +
                                   std::to_string(budget.node_cap)
                             : "noether|" + rep_path + "|k=" + std::to_string(k) +
                                   "|cap=" + std::to_string(cap));
      if (auto hit = cache.lookup(key)) {
        emit(*hit, format);
        return kExitOk;
      }
      Json out =
          dav->parsed() ? run_davenport(group, k, budget, threads) : run_noether(rep_path, k, cap);
      cache.store(key, out);
      emit(out, format);
      return kExitOk;
    }
    if (cls->parsed()) {
      PermGroup G = load_group(group);
      auto report = classify_structure(G);
      Json out;
      out["group"] = group;
      out["order"] = G.order();
      out["identified"] = identify(G).name;
      Json tags = Json::array();
      Json cases = Json::array();
      for (const auto& c : report.cases) {
        tags.push_back(c.tag);
        Json cj;
        cj["tag"] = c.tag;
        cj["params"] = c.params;
        cj["detail"] = c.detail;
        cases.push_back(cj);
      }
      out["cases"] = tags;
      out["witnesses"] = cases;
      out["partial"] = report.partial;
      emit(out, format);
      return kExitOk;
    }
    if (bnd->parsed()) {
      PermGroup G = load_group(group);
      BoundsOptions opts;
      opts.depth = depth;
      opts.include_external = with_external;
      auto cert = derive_bounds(G, k, opts);
      validate_certificate(cert);
      if (format == "text") {
        std::cout << render_certificate(cert);
      } else {
        Json out;
        out["subject"] = cert.subject;
        out["order"] = cert.order;
        out["k"] = cert.k;
        out["upper"] = fact_to_json(cert.best_upper);
        out["lower"] = fact_to_json(cert.best_lower);
        out["partial"] = cert.partial;
        emit(out, format);
      }
      return kExitOk;
    }
    if (cat->parsed()) {
      auto entries = catalog(order_max);
      if (format == "csv") {
        std::cout << "label,order,identified" << (with_classify ? ",cases" : "") << "\n";
        for (const auto& e : entries) {
          std::cout << e.label << "," << e.group.order() << "," << identify(e.group).name;
          if (with_classify) {
            std::cout << ",";
            auto rep = classify_structure(e.group);
            for (size_t i = 0; i < rep.cases.size(); ++i)
              std::cout << (i ? "|" : "") << rep.cases[i].tag;
          }
          std::cout << "\n";
        }
      } else {
        Json arr = Json::array();
        for (const auto& e : entries) {
          Json j;
          j["label"] = e.label;
          j["order"] = e.group.order();
          j["identified"] = identify(e.group).name;
          if (with_classify) {
            Json tags = Json::array();
            for (const auto& c : classify_structure(e.group).cases) tags.push_back(c.tag);
            j["cases"] = tags;
          }
          arr.push_back(j);
        }
        std::cout << arr.dump(2) << "\n";
      }
      return kExitOk;
    }
    if (ver->parsed()) {
      if (tier != "fast" && tier != "full") throw input_error("verify: tier must be fast|full");
      return cmd_verify(tier, verify_format, seed);
    }
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}
