// Command-line front end: factorization, odd-length code queries, the
// length-2^k classification, and formula-vs-oracle verification reports.
//
// Exit codes: 0 success, 1 usage or domain error, 2 verification found
// discrepancies.  Output is deterministic: no timestamps, fixed orders.

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "negacode/factor.hpp"
#include "negacode/odd_codes.hpp"
#include "negacode/oracle.hpp"
#include "negacode/pow2_codes.hpp"

using json = nlohmann::ordered_json;
namespace nc = negacode;

namespace {

// stream selected by --out (file) or stdout
class OutStream {
 public:
  explicit OutStream(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw nc::Error("cannot open output file '" + path + "'");
    }
  }
  std::ostream& get() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string yesno(bool b) { return b ? "yes" : "no"; }

// ---- factor ----

int run_factor(int n, const std::string& ring, bool as_json, const std::string& out_path) {
  const nc::FactorSet fs = nc::negacyclic_factors(n);
  std::map<std::string, std::vector<std::string>> lists;
  for (const auto& f : fs.f2_factors) lists["f2"].push_back(nc::to_string(f));
  for (const auto& f : fs.z4_factors) lists["z4"].push_back(nc::to_string(f));
  for (const auto& f : fs.nega_factors) lists["nega"].push_back(nc::to_string(f));
  OutStream out(out_path);
  if (as_json) {
    if (!ring.empty()) {
      out.get() << json(lists.at(ring)).dump(1) << "\n";
    } else {
      json j;
      j["schema"] = 1;
      j["n"] = n;
      j["f2"] = lists["f2"];
      j["z4"] = lists["z4"];
      j["nega"] = lists["nega"];
      out.get() << j.dump(1) << "\n";
    }
    return 0;
  }
  if (!ring.empty()) {
    for (const auto& s : lists.at(ring)) out.get() << s << "\n";
    return 0;
  }
  out.get() << "f2 factors of x^" << n << "-1:\n";
  for (const auto& s : lists["f2"]) out.get() << "  " << s << "\n";
  out.get() << "z4 factors of x^" << n << "-1:\n";
  for (const auto& s : lists["z4"]) out.get() << "  " << s << "\n";
  out.get() << "negacyclic factors of x^" << n << "+1:\n";
  for (const auto& s : lists["nega"]) out.get() << "  " << s << "\n";
  return 0;
}

// ---- odd ----

int run_odd_count(int n, bool as_json, const std::string& out_path) {
  const unsigned long long c = nc::count_codes(n);
  OutStream out(out_path);
  if (as_json) {
    json j;
    j["schema"] = 1;
    j["n"] = n;
    j["count"] = c;
    out.get() << j.dump(1) << "\n";
  } else {
    out.get() << c << "\n";
  }
  return 0;
}

int run_odd_rank(int n, const std::string& g_text, const std::string& p_text,
                 const std::string& a_text, bool as_json, const std::string& out_path) {
  const nc::PolyZ4 g = nc::parse_poly_z4(g_text);
  const nc::PolyZ4 p = p_text.empty() ? nc::PolyZ4{} : nc::parse_poly_z4(p_text);
  const nc::PolyZ4 a = a_text.empty() ? nc::PolyZ4{} : nc::parse_poly_z4(a_text);
  const nc::OddCode code = nc::make_odd_code(n, g, p, a);
  const nc::SpanningFamily fam = nc::rank_and_spanning(code);
  const nc::IdealSpan span = nc::code_span(code);
  const bool spans = nc::family_spans(fam.members, span);
  const int oracle_rank = nc::nakayama_rank(span);
  OutStream out(out_path);
  if (as_json) {
    json j;
    j["schema"] = 1;
    j["n"] = n;
    j["branch"] = fam.regular_monic_branch ? "regular-monic" : "two-generator";
    j["k1"] = fam.k1;
    j["k2"] = fam.k2;
    j["rank"] = fam.rank;
    j["gen_shifts"] = fam.gen_shifts;
    j["tor_shifts"] = fam.tor_shifts;
    j["family_spans"] = spans;
    j["oracle_rank"] = oracle_rank;
    j["code_size"] = nc::span_size(span);
    out.get() << j.dump(1) << "\n";
  } else {
    out.get() << "branch: " << (fam.regular_monic_branch ? "regular-monic" : "two-generator")
              << "\n"
              << "k1 = " << fam.k1 << ", k2 = " << fam.k2 << "\n"
              << "rank = " << fam.rank << "\n"
              << "family: x^i*(g+u*p) for i < " << fam.gen_shifts << "; x^i*(u*a) for i < "
              << fam.tor_shifts << "\n"
              << "family spans code: " << yesno(spans) << "\n"
              << "oracle minimal generator count: " << oracle_rank << "\n"
              << "code size: " << nc::span_size(span) << "\n";
  }
  return 0;
}

int run_odd_free(int n, const std::string& gen_text, bool as_json,
                 const std::string& out_path) {
  const nc::PolyR gen = nc::parse_poly_r(gen_text);
  nc::PolyZ4 g, p;
  g.c.reserve(gen.c.size());
  p.c.reserve(gen.c.size());
  for (const auto& c : gen.c) {
    g.c.push_back(c.a0);
    p.c.push_back(c.a1);
  }
  const nc::OddCode code = nc::make_odd_code(n, nc::make_poly_z4(g.c), nc::make_poly_z4(p.c),
                                             nc::PolyZ4{});
  const nc::FreeCheck fc = nc::is_free(code, gen);
  OutStream out(out_path);
  if (as_json) {
    json j;
    j["schema"] = 1;
    j["n"] = n;
    j["free"] = fc.free;
    if (fc.free_rank) j["free_rank"] = *fc.free_rank;
    if (fc.monic_divisor) j["divisor"] = nc::to_string(*fc.monic_divisor);
    out.get() << j.dump(1) << "\n";
  } else {
    out.get() << "free: " << yesno(fc.free) << "\n";
    if (fc.free_rank) out.get() << "free rank: " << *fc.free_rank << "\n";
    if (fc.monic_divisor) out.get() << "monic divisor: " << nc::to_string(*fc.monic_divisor) << "\n";
  }
  return 0;
}

// ---- p2 ----

std::string h_column(const nc::CodeDescriptor& d) {
  auto bits = [](unsigned mask) {
    std::string s;
    for (; mask; mask >>= 1) s += static_cast<char>('0' + (mask & 1));
    return s;
  };
  if (d.h1 || d.h2) return bits(d.h1) + "/" + bits(d.h2);
  return bits(d.h);
}

struct ListRow {
  nc::CodeDescriptor desc;
  unsigned long long size = 0;
  int ann_index = -1;
  bool so = false;
  bool sd = false;
};

std::vector<ListRow> build_list_rows(int n) {
  const auto codes = nc::enumerate_codes(n);
  std::vector<nc::IdealSpan> spans;
  std::map<nc::IdealSpan, int> index_of;
  for (size_t i = 0; i < codes.size(); ++i) {
    spans.push_back(nc::span_of(codes[i]));
    index_of[spans.back()] = static_cast<int>(i);
  }
  std::vector<ListRow> rows;
  for (size_t i = 0; i < codes.size(); ++i) {
    ListRow r;
    r.desc = codes[i];
    r.size = nc::span_size(spans[i]);
    const nc::IdealSpan ann = nc::ann_oracle(spans[i]);
    const auto it = index_of.find(ann);
    r.ann_index = it == index_of.end() ? -1 : it->second;
    const nc::IdealSpan dual = nc::reciprocal_image(ann);
    r.sd = spans[i] == dual;
    r.so = nc::is_subspan(spans[i], dual);
    rows.push_back(std::move(r));
  }
  return rows;
}

int run_p2_list(int n, bool as_json, bool as_csv, const std::string& out_path) {
  const auto rows = build_list_rows(n);
  OutStream out(out_path);
  if (as_csv) {
    out.get() << "index,generators,type,s,t,m,m1,l,h,size,annihilator-index,"
                 "self-orthogonal,self-dual\n";
    for (size_t i = 0; i < rows.size(); ++i) {
      const auto& d = rows[i].desc;
      out.get() << i << ",\"" << nc::generators_text(d) << "\"," << nc::type_name(d.type)
                << "," << d.s << "," << d.t << "," << d.m << "," << d.m1 << "," << d.l
                << "," << h_column(d) << "," << rows[i].size << "," << rows[i].ann_index
                << "," << (rows[i].so ? 1 : 0) << "," << (rows[i].sd ? 1 : 0) << "\n";
    }
    return 0;
  }
  if (as_json) {
    json arr = json::array();
    for (size_t i = 0; i < rows.size(); ++i) {
      const auto& d = rows[i].desc;
      json j;
      j["index"] = i;
      j["descriptor"] = nc::to_string(d);
      j["generators"] = nc::generators_text(d);
      j["type"] = nc::type_name(d.type);
      j["s"] = d.s;
      j["t"] = d.t;
      j["m"] = d.m;
      j["m1"] = d.m1;
      j["l"] = d.l;
      j["h"] = h_column(d);
      j["size"] = rows[i].size;
      j["annihilator_index"] = rows[i].ann_index;
      j["self_orthogonal"] = rows[i].so;
      j["self_dual"] = rows[i].sd;
      arr.push_back(std::move(j));
    }
    json top;
    top["schema"] = 1;
    top["n"] = n;
    top["count"] = rows.size();
    top["codes"] = std::move(arr);
    out.get() << top.dump(1) << "\n";
    return 0;
  }
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& d = rows[i].desc;
    out.get() << i << "\t" << nc::to_string(d) << "\t" << nc::generators_text(d) << "\t"
              << rows[i].size << "\tann=" << rows[i].ann_index << "\t"
              << (rows[i].so ? "so" : "--") << "\t" << (rows[i].sd ? "sd" : "--") << "\n";
  }
  out.get() << rows.size() << " codes\n";
  return 0;
}

int run_p2_dual(int n, const std::string& code_text, bool as_json,
                const std::string& out_path) {
  const nc::CodeDescriptor d = nc::parse_descriptor(code_text, n);
  const nc::IdealSpan dual = nc::dual(d);
  const nc::CodeDescriptor dd = nc::descriptor_of_span(dual);
  OutStream out(out_path);
  if (as_json) {
    json j;
    j["schema"] = 1;
    j["n"] = n;
    j["code"] = nc::to_string(d);
    j["dual"] = nc::to_string(dd);
    j["dual_generators"] = nc::generators_text(dd);
    j["dual_size"] = nc::span_size(dual);
    out.get() << j.dump(1) << "\n";
  } else {
    out.get() << "dual: " << nc::to_string(dd) << "\n"
              << "generators: " << nc::generators_text(dd) << "\n"
              << "size: " << nc::span_size(dual) << "\n";
  }
  return 0;
}

int run_p2_size(int n, const std::string& code_text, bool as_json,
                const std::string& out_path) {
  const nc::CodeDescriptor d = nc::parse_descriptor(code_text, n);
  const unsigned long long size = nc::cardinality(d);
  OutStream out(out_path);
  if (as_json) {
    json j;
    j["schema"] = 1;
    j["n"] = n;
    j["code"] = nc::to_string(d);
    j["size"] = size;
    out.get() << j.dump(1) << "\n";
  } else {
    out.get() << size << "\n";
  }
  return 0;
}

int run_p2_selfdual(int n, bool as_json, const std::string& out_path) {
  const auto rows = build_list_rows(n);
  std::vector<std::string> sd;
  for (const auto& r : rows)
    if (r.sd) sd.push_back(nc::to_string(r.desc));
  OutStream out(out_path);
  if (as_json) {
    json j;
    j["schema"] = 1;
    j["n"] = n;
    j["count"] = sd.size();
    j["codes"] = sd;
    out.get() << j.dump(1) << "\n";
  } else {
    for (const auto& s : sd) out.get() << s << "\n";
    out.get() << sd.size() << " self-dual codes\n";
  }
  return 0;
}

json report_to_json(const nc::DiscrepancyReport& rep, const std::string& command) {
  json rows = json::array();
  for (const auto& r : rep.rows) {
    json j;
    j["index"] = r.index;
    j["descriptor"] = r.descriptor;
    j["generators"] = r.generators;
    j["size"] = r.size;
    j["annihilator_index"] = r.ann_index;
    j["dual_index"] = r.dual_index;
    j["self_orthogonal"] = r.self_orthogonal;
    j["self_dual"] = r.self_dual;
    j["agrees"] = r.agrees;
    rows.push_back(std::move(j));
  }
  json discs = json::array();
  for (const auto& d : rep.discrepancies) {
    json j;
    j["kind"] = d.kind;
    j["code"] = d.code;
    j["detail"] = d.detail;
    discs.push_back(std::move(j));
  }
  json top;
  top["schema"] = 1;
  top["command"] = command;
  top["n"] = rep.n;
  top["rows"] = std::move(rows);
  top["discrepancies"] = std::move(discs);
  return top;
}

int run_p2_verify(int n, const std::string& out_path) {
  const nc::DiscrepancyReport rep = nc::verify(n);
  const json j = report_to_json(rep, "p2 verify");
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw nc::Error("cannot open output file '" + out_path + "'");
    f << j.dump(1) << "\n";
    std::cout << "verify n=" << n << ": " << rep.rows.size() << " codes, "
              << rep.discrepancies.size() << " discrepancies -> " << out_path << "\n";
  } else {
    std::cout << j.dump(1) << "\n";
  }
  return rep.discrepancies.empty() ? 0 : 2;
}

int run_p2_table(int n, bool as_json, const std::string& out_path) {
  if (n != 2) throw nc::UnsupportedLength("the embedded reference table covers n = 2 only");
  const auto& tbl = nc::reference_table_n2();
  // spans and lowest-row names
  std::map<nc::IdealSpan, int> name_of;
  std::vector<nc::IdealSpan> spans;
  for (const auto& r : tbl) {
    nc::IdealSpan s = r.gens.empty() ? nc::ideal_closure_vecs({}, n) : nc::ideal_closure(r.gens);
    if (!name_of.count(s)) name_of[s] = r.row;
    spans.push_back(std::move(s));
  }
  OutStream out(out_path);
  if (as_json) {
    json arr = json::array();
    for (size_t i = 0; i < tbl.size(); ++i) {
      const auto& r = tbl[i];
      const nc::IdealSpan dual = nc::reciprocal_image(nc::ann_oracle(spans[i]));
      json j;
      j["row"] = r.row;
      j["generators"] = r.generator_text;
      j["size"] = nc::span_size(spans[i]);
      j["printed_size"] = r.printed_size;
      j["printed_annihilator"] = "C" + std::to_string(r.printed_ann);
      j["oracle_annihilator"] = "C" + std::to_string(name_of.at(nc::ann_oracle(spans[i])));
      j["self_orthogonal"] = nc::is_subspan(spans[i], dual);
      j["self_dual"] = spans[i] == dual;
      arr.push_back(std::move(j));
    }
    json top;
    top["schema"] = 1;
    top["n"] = n;
    top["rows"] = std::move(arr);
    out.get() << top.dump(1) << "\n";
    return 0;
  }
  out.get() << "row  generators              size  printed-ann  oracle-ann  so  sd\n";
  for (size_t i = 0; i < tbl.size(); ++i) {
    const auto& r = tbl[i];
    const nc::IdealSpan dual = nc::reciprocal_image(nc::ann_oracle(spans[i]));
    const bool so = nc::is_subspan(spans[i], dual);
    const bool sd = spans[i] == dual;
    char line[160];
    std::snprintf(line, sizeof(line), "C%-3d %-23s %-5llu C%-11d C%-10d %-3s %s\n", r.row,
                  r.generator_text.c_str(), nc::span_size(spans[i]), r.printed_ann,
                  name_of.at(nc::ann_oracle(spans[i])), so ? "y" : ".", sd ? "y" : ".");
    out.get() << line;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"negacyclic codes over Z4+uZ4: factorization, classification, verification"};
  app.require_subcommand(1);

  int n = 0;
  std::string ring, out_path, g_text, p_text, a_text, gen_text, code_text;
  bool as_json = false, as_csv = false;

  auto* factor = app.add_subcommand("factor", "factor x^n-1 and x^n+1 for odd n");
  factor->add_option("--n", n, "odd length")->required();
  factor->add_option("--ring", ring, "which factor list: f2, z4 or nega")
      ->check(CLI::IsMember({"f2", "z4", "nega"}));
  factor->add_flag("--json", as_json, "JSON output");
  factor->add_option("--out", out_path, "write output to a file");

  auto* odd = app.add_subcommand("odd", "odd-length negacyclic codes");
  odd->require_subcommand(1);
  auto* ocount = odd->add_subcommand("count", "number of negacyclic codes (7^m)");
  ocount->add_option("--n", n, "odd length")->required();
  ocount->add_flag("--json", as_json, "JSON output");
  ocount->add_option("--out", out_path, "write output to a file");
  auto* orank = odd->add_subcommand("rank", "rank and spanning family of <g+up, ua>");
  orank->add_option("--n", n, "odd length")->required();
  orank->add_option("--g", g_text, "g(x) over Z4")->required();
  orank->add_option("--p", p_text, "p(x) over Z4 (default 0)");
  orank->add_option("--a", a_text, "a(x) over Z4 (default 0)");
  orank->add_flag("--json", as_json, "JSON output");
  orank->add_option("--out", out_path, "write output to a file");
  auto* ofree = odd->add_subcommand("free", "freeness of a principally generated code");
  ofree->add_option("--n", n, "odd length")->required();
  ofree->add_option("--gen", gen_text, "principal generator over R")->required();
  ofree->add_flag("--json", as_json, "JSON output");
  ofree->add_option("--out", out_path, "write output to a file");

  auto* p2 = app.add_subcommand("p2", "length-2^k classification");
  p2->require_subcommand(1);
  auto* plist = p2->add_subcommand("list", "enumerate all distinct codes");
  plist->add_option("--n", n, "length 2^k")->required();
  plist->add_flag("--json", as_json, "JSON output");
  plist->add_flag("--csv", as_csv, "CSV output");
  plist->add_option("--out", out_path, "write output to a file");
  auto* pdual = p2->add_subcommand("dual", "dual of a code given by descriptor");
  pdual->add_option("--n", n, "length 2^k")->required();
  pdual->add_option("--code", code_text, "code descriptor, e.g. 'T2.1(s=2,t=0,h=1)'")->required();
  pdual->add_flag("--json", as_json, "JSON output");
  pdual->add_option("--out", out_path, "write output to a file");
  auto* psize = p2->add_subcommand("size", "cardinality of a code by the case formulas");
  psize->add_option("--n", n, "length 2^k")->required();
  psize->add_option("--code", code_text, "code descriptor")->required();
  psize->add_flag("--json", as_json, "JSON output");
  psize->add_option("--out", out_path, "write output to a file");
  auto* psd = p2->add_subcommand("selfdual", "list the self-dual codes");
  psd->add_option("--n", n, "length 2^k")->required();
  psd->add_flag("--json", as_json, "JSON output");
  psd->add_option("--out", out_path, "write output to a file");
  auto* pverify = p2->add_subcommand("verify", "formula-vs-oracle verification report");
  pverify->add_option("--n", n, "2 or 4")->required();
  pverify->add_option("--out", out_path, "write the JSON report to a file");
  auto* ptable = p2->add_subcommand("table", "annotated reference table (n = 2)");
  ptable->add_option("--n", n, "must be 2")->required();
  ptable->add_flag("--json", as_json, "JSON output");
  ptable->add_option("--out", out_path, "write output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (factor->parsed()) return run_factor(n, ring, as_json, out_path);
    if (ocount->parsed()) return run_odd_count(n, as_json, out_path);
    if (orank->parsed()) return run_odd_rank(n, g_text, p_text, a_text, as_json, out_path);
    if (ofree->parsed()) return run_odd_free(n, gen_text, as_json, out_path);
    if (plist->parsed()) return run_p2_list(n, as_json, as_csv, out_path);
    if (pdual->parsed()) return run_p2_dual(n, code_text, as_json, out_path);
    if (psize->parsed()) return run_p2_size(n, code_text, as_json, out_path);
    if (psd->parsed()) return run_p2_selfdual(n, as_json, out_path);
    if (pverify->parsed()) return run_p2_verify(n, out_path);
    if (ptable->parsed()) return run_p2_table(n, as_json, out_path);
  } catch (const nc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
