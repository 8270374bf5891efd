#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "linrec/error.hpp"
#include "linrec/io.hpp"
#include "linrec/kseq.hpp"
#include "linrec/reversal.hpp"

namespace linrec::cli {

namespace {

using nlohmann::json;

enum class Format { Table, Json, Csv };

struct Options {
  std::string format = "table";
  std::string ring;
  std::optional<std::int64_t> from;
  std::optional<std::int64_t> to;
  bool charpoly_only = false;
  std::string name;

  Format fmt() const {
    if (format == "json") return Format::Json;
    if (format == "csv") return Format::Csv;
    return Format::Table;
  }
};

struct Context {
  const Options& opt;
  std::istream& in;
  std::ostream& out;
};

using Rows = std::vector<std::vector<std::string>>;

// ---------------------------------------------------------------- input

std::string read_source(const Context& ctx, const std::string& arg) {
  if (arg == "-") {
    std::ostringstream ss;
    ss << ctx.in.rdbuf();
    return ss.str();
  }
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return arg;
  std::ifstream file(arg);
  if (!file) throw ParseError("cannot read descriptor '" + arg + "'");
  std::ostringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

io::Descriptor load(const Context& ctx, const std::string& arg) {
  std::string text = read_source(ctx, arg);
  if (!ctx.opt.ring.empty()) {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("descriptor: expected an object");
    j["ring"] = json::parse(io::to_json(io::parse_ring(ctx.opt.ring)));
    text = j.dump();
  }
  auto d = io::parse_descriptor(text);
  if (d.name.empty()) d.name = "u";
  return d;
}

const LinRecSeq& as_lin(const io::Descriptor& d, const char* command) {
  if (const auto* u = std::get_if<LinRecSeq>(&d.seq)) return *u;
  throw DomainError(std::string(command) + " expects a one-dimensional N_0-indexed sequence");
}

const KSeq& as_kseq(const io::Descriptor& d, const char* command) {
  if (const auto* w = std::get_if<KSeq>(&d.seq)) return *w;
  throw DomainError(std::string(command) + " expects a k-sequence descriptor (with \"elem\")");
}

MultiIndex parse_multi_index(const std::string& text) {
  MultiIndex out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(part, &used));
      if (part.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw ParseError("bad multi-index '" + text + "'");
    }
  }
  if (out.empty()) throw ParseError("empty multi-index");
  return out;
}

// ---------------------------------------------------------------- output helpers

std::string value_str(const Value& v) {
  if (v.size() == 1) return v[0].get_str();
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

json value_json(const Value& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(c.get_str());
  return a;
}

std::string index_str(const MultiIndex& n) {
  std::string s = "(";
  for (std::size_t i = 0; i < n.size(); ++i) s += (i ? "," : "") + std::to_string(n[i]);
  return s + ")";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string values_str(const std::vector<Value>& vs) {
  std::vector<std::string> parts;
  for (const auto& v : vs) parts.push_back(value_str(v));
  return join(parts, ", ");
}

/// First column left-aligned, the rest right-aligned, cells separated by " | ".
void print_table(std::ostream& out, const Rows& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const std::string pad(width[c] - row[c].size(), ' ');
      if (c) line += " | ";
      line += c == 0 ? row[c] + pad : pad + row[c];
    }
    out << line << '\n';
  }
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

void print_csv(std::ostream& out, const Rows& rows) {
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_cell(row[c]);
    out << '\n';
  }
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

/// A run of evaluated terms: index label / value label.
struct Series {
  std::string index_key;    // "n" or "z"
  std::string value_label;  // e.g. "u(n)"
  std::vector<std::string> index_text;
  std::vector<json> index_json;
  std::vector<Value> values;
};

void emit_series(const Context& ctx, const Series& s) {
  switch (ctx.opt.fmt()) {
    case Format::Table: {
      Rows rows(2);
      rows[0].push_back(s.index_key);
      rows[1].push_back(s.value_label);
      for (std::size_t i = 0; i < s.values.size(); ++i) {
        rows[0].push_back(s.index_text[i]);
        rows[1].push_back(value_str(s.values[i]));
      }
      print_table(ctx.out, rows);
      break;
    }
    case Format::Csv: {
      Rows rows;
      const std::size_t dim = s.values.empty() ? 1 : s.values.front().size();
      std::vector<std::string> header{s.index_key};
      for (std::size_t c = 0; c < dim; ++c) {
        header.push_back(dim == 1 ? s.value_label : s.value_label + "[" + std::to_string(c) + "]");
      }
      rows.push_back(header);
      for (std::size_t i = 0; i < s.values.size(); ++i) {
        std::vector<std::string> row{s.index_text[i]};
        for (const auto& c : s.values[i]) row.push_back(c.get_str());
        rows.push_back(row);
      }
      print_csv(ctx.out, rows);
      break;
    }
    case Format::Json: {
      json a = json::array();
      for (std::size_t i = 0; i < s.values.size(); ++i) {
        a.push_back({{s.index_key, s.index_json[i]}, {"value", value_json(s.values[i])}});
      }
      print_json(ctx.out, a);
      break;
    }
  }
}

Series scalar_series(std::string key, std::string label, std::int64_t from, std::vector<Value> values) {
  Series s{std::move(key), std::move(label), {}, {}, std::move(values)};
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    const auto n = from + static_cast<std::int64_t>(i);
    s.index_text.push_back(std::to_string(n));
    s.index_json.emplace_back(n);
  }
  return s;
}

std::vector<std::pair<std::string, std::string>> describe(const io::AnySeq& seq, const std::string& name) {
  std::vector<std::pair<std::string, std::string>> f;
  f.emplace_back("name", name);
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        f.emplace_back("ring", s.ring().to_string());
        if (s.dim() > 1) f.emplace_back("dim", std::to_string(s.dim()));
        if constexpr (std::is_same_v<T, KSeq>) {
          std::vector<std::string> elem;
          for (const auto& p : s.elem()) elem.push_back(to_string(p));
          f.emplace_back("elem", join(elem, "; "));
          std::vector<std::string> vals;
          for (std::size_t i = 0; i < s.chain().size(); ++i) {
            vals.push_back(index_str(s.chain()[i]) + ":" + value_str(s.values()[i]));
          }
          f.emplace_back("values", join(vals, " "));
        } else {
          if constexpr (std::is_same_v<T, BiRecSeq>) f.emplace_back("indexing", "Z");
          f.emplace_back("charpoly", to_string(s.charpoly()));
          f.emplace_back("init", values_str(s.init()));
        }
      },
      seq);
  return f;
}

std::string summary(const io::AnySeq& seq) {
  auto fields = describe(seq, "");
  std::vector<std::string> parts;
  for (const auto& [k, v] : fields) {
    if (k == "charpoly" || k == "init" || k == "elem" || k == "values") parts.push_back(k + " " + v);
  }
  return join(parts, "; ");
}

json descriptor_json(const io::AnySeq& seq, const std::string& name) {
  return json::parse(io::to_json(seq, name));
}

void emit_descriptor(const Context& ctx, const io::AnySeq& seq, const std::string& name) {
  if (ctx.opt.charpoly_only) {
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, KSeq>) {
            json a = json::array();
            std::vector<std::string> text;
            for (const auto& p : s.elem()) {
              a.push_back(json::parse(io::to_json(p)));
              text.push_back(to_string(p));
            }
            if (ctx.opt.fmt() == Format::Json) {
              print_json(ctx.out, a);
            } else {
              ctx.out << join(text, ctx.opt.fmt() == Format::Csv ? "," : "; ") << '\n';
            }
          } else if (ctx.opt.fmt() == Format::Json) {
            print_json(ctx.out, json::parse(io::to_json(s.charpoly())));
          } else {
            ctx.out << to_string(s.charpoly()) << '\n';
          }
        },
        seq);
    return;
  }
  switch (ctx.opt.fmt()) {
    case Format::Json:
      print_json(ctx.out, descriptor_json(seq, name));
      break;
    case Format::Table: {
      Rows rows;
      for (const auto& [k, v] : describe(seq, name)) rows.push_back({k + ":", v});
      for (const auto& r : rows) ctx.out << r[0] << ' ' << r[1] << '\n';
      break;
    }
    case Format::Csv: {
      Rows rows{{"field", "value"}};
      for (const auto& [k, v] : describe(seq, name)) rows.push_back({k, v});
      print_csv(ctx.out, rows);
      break;
    }
  }
}

std::string out_name(const Context& ctx, const std::string& fallback) {
  return ctx.opt.name.empty() ? fallback : ctx.opt.name;
}

// ---------------------------------------------------------------- k-sequences

std::vector<MultiIndex> box_points(std::size_t k, std::int64_t from, std::int64_t to) {
  if (to < from) throw ParseError("--to must not be smaller than --from");
  const auto side = static_cast<std::uint64_t>(to - from + 1);
  std::uint64_t count = 1;
  for (std::size_t j = 0; j < k; ++j) {
    count *= side;
    if (count > 1'000'000) throw DomainError("evaluation box has more than 10^6 points");
  }
  std::vector<MultiIndex> pts;
  MultiIndex n(k, from);
  for (std::uint64_t c = 0; c < count; ++c) {
    pts.push_back(n);
    for (std::size_t j = k; j-- > 0;) {
      if (++n[j] <= to) break;
      n[j] = from;
    }
  }
  return pts;
}

void emit_kvalues(const Context& ctx, const KSeq& w, const std::string& label,
                  const std::vector<MultiIndex>& pts, const std::vector<Value>& vals, bool grid) {
  if (grid && w.k() == 2 && ctx.opt.fmt() == Format::Table) {
    // Rows n1, columns n2.
    std::vector<std::int64_t> n1s, n2s;
    for (const auto& p : pts) {
      if (std::find(n1s.begin(), n1s.end(), p[0]) == n1s.end()) n1s.push_back(p[0]);
      if (std::find(n2s.begin(), n2s.end(), p[1]) == n2s.end()) n2s.push_back(p[1]);
    }
    Rows rows(1);
    rows[0].push_back(label + " n1\\n2");
    for (auto n2 : n2s) rows[0].push_back(std::to_string(n2));
    std::size_t at = 0;
    for (auto n1 : n1s) {
      std::vector<std::string> row{std::to_string(n1)};
      for (std::size_t c = 0; c < n2s.size(); ++c) row.push_back(value_str(vals[at++]));
      rows.push_back(row);
    }
    print_table(ctx.out, rows);
    return;
  }
  Series s{"n", label, {}, {}, vals};
  for (const auto& p : pts) {
    s.index_text.push_back(index_str(p));
    s.index_json.emplace_back(p);
  }
  emit_series(ctx, s);
}

void kseq_values(const Context& ctx, const io::Descriptor& d, const std::vector<std::string>& at, bool reversed) {
  const KSeq& w = as_kseq(d, reversed ? "kseq reverse" : "kseq eval");
  std::vector<MultiIndex> pts;
  for (const auto& a : at) {
    pts.push_back(parse_multi_index(a));
    if (pts.back().size() != w.k()) {
      throw ParseError("multi-index " + a + " has arity " + std::to_string(pts.back().size()) +
                       ", the sequence has k = " + std::to_string(w.k()));
    }
  }
  const bool grid = pts.empty();
  if (grid) {
    pts = box_points(w.k(), ctx.opt.from.value_or(reversed ? -2 : 0), ctx.opt.to.value_or(reversed ? 2 : 4));
  }
  std::vector<Value> vals;
  vals.reserve(pts.size());
  for (const auto& p : pts) vals.push_back(reversed ? k_reverse_term(w, p) : kterm(w, p));
  emit_kvalues(ctx, w, reversed ? "Rev(" + d.name + ")" : d.name, pts, vals, grid);
}

// ---------------------------------------------------------------- commands

void eval_descriptor(const Context& ctx, const io::Descriptor& d) {
  if (std::holds_alternative<KSeq>(d.seq)) {
    kseq_values(ctx, d, {}, false);
    return;
  }
  const std::int64_t from = ctx.opt.from.value_or(0);
  const std::int64_t to = ctx.opt.to.value_or(9);
  if (to < from) throw ParseError("--to must not be smaller than --from");

  if (const auto* w = std::get_if<BiRecSeq>(&d.seq)) {
    emit_series(ctx, scalar_series("z", d.name + "(z)", from, bi_terms(*w, from, to)));
    return;
  }
  const auto& u = std::get<LinRecSeq>(d.seq);
  if (from < 0) {
    throw DomainError("negative index on an N_0-indexed sequence; use `reverse` or a bisequence descriptor");
  }
  std::vector<Value> values;
  constexpr std::int64_t kDirect = 1 << 16;
  if (to < kDirect) {
    auto all = terms(u, static_cast<std::size_t>(to + 1));
    values.assign(all.begin() + from, all.end());
  } else {
    for (std::int64_t n = from; n <= to; ++n) values.push_back(term_fast(u, static_cast<std::uint64_t>(n)));
  }
  emit_series(ctx, scalar_series("n", d.name + "(n)", from, std::move(values)));
}

void cmd_eval(const Context& ctx, const std::string& src) { eval_descriptor(ctx, load(ctx, src)); }

/// With --from or --to the combined sequence is evaluated, otherwise it is
/// printed as a descriptor.
void emit_combined(const Context& ctx, io::AnySeq seq, const std::string& name) {
  const bool ranged = ctx.opt.from.has_value() || ctx.opt.to.has_value();
  if (ranged && !ctx.opt.charpoly_only) return eval_descriptor(ctx, io::Descriptor{name, std::move(seq)});
  emit_descriptor(ctx, seq, name);
}

void cmd_combine(const Context& ctx, const std::string& op, const std::string& a_src, const std::string& b_src) {
  const auto a = load(ctx, a_src);
  const auto b = load(ctx, b_src);
  const auto* ua = std::get_if<LinRecSeq>(&a.seq);
  const auto* ub = std::get_if<LinRecSeq>(&b.seq);
  const std::string name = out_name(ctx, "z");
  if (ua && ub) {
    if (op == "hadamard") return emit_combined(ctx, hadamard(*ua, *ub), name);
    if (op == "hurwitz") return emit_combined(ctx, hurwitz(*ua, *ub), name);
    return emit_combined(ctx, seq_sum(*ua, *ub), name);
  }
  const auto* wa = std::get_if<BiRecSeq>(&a.seq);
  const auto* wb = std::get_if<BiRecSeq>(&b.seq);
  if (wa && wb && op == "hadamard") return emit_combined(ctx, bi_hadamard(*wa, *wb), name);
  const auto* ka = std::get_if<KSeq>(&a.seq);
  const auto* kb = std::get_if<KSeq>(&b.seq);
  if (ka && kb && op == "hadamard") return emit_combined(ctx, k_hadamard(*ka, *kb), name);
  if (ka && kb && op == "hurwitz") return emit_combined(ctx, k_hurwitz(*ka, *kb), name);
  throw DomainError("combine " + op + " is not defined for these descriptor kinds");
}

void cmd_reverse(const Context& ctx, const std::string& src, bool via_gamma) {
  const auto d = load(ctx, src);
  if (std::holds_alternative<KSeq>(d.seq)) {
    kseq_values(ctx, d, {}, true);
    return;
  }
  const std::int64_t from = ctx.opt.from.value_or(-4);
  const std::int64_t to = ctx.opt.to.value_or(4);
  if (to < from) throw ParseError("--to must not be smaller than --from");
  std::optional<BiRecSeq> w;
  if (const auto* u = std::get_if<LinRecSeq>(&d.seq)) {
    w = via_gamma ? gamma(*u) : reverse(*u);
  } else {
    w = std::get<BiRecSeq>(d.seq);
  }
  emit_series(ctx, scalar_series("z", "Rev(" + d.name + ")(z)", from, bi_terms(*w, from, to)));
}

void cmd_split(const Context& ctx, const std::string& poly_text) {
  const RingSpec ring = io::parse_ring(ctx.opt.ring.empty() ? "Z" : ctx.opt.ring);
  const Poly f = io::parse_poly_text(ring, poly_text);
  const XSplit s = split_x_part(f);
  switch (ctx.opt.fmt()) {
    case Format::Table:
      ctx.out << "d=" << s.d << " q=" << to_string(s.q);
      if (s.nonunit_constant) ctx.out << " (constant term of q is not a unit)";
      ctx.out << '\n';
      break;
    case Format::Csv:
      print_csv(ctx.out, {{"d", "q", "nonunit_constant"},
                          {std::to_string(s.d), to_string(s.q), s.nonunit_constant ? "true" : "false"}});
      break;
    case Format::Json:
      print_json(ctx.out, {{"ring", json::parse(io::to_json(ring))},
                           {"d", s.d},
                           {"q", json::parse(io::to_json(s.q))},
                           {"nonunit_constant", s.nonunit_constant}});
      break;
  }
}

void cmd_decompose(const Context& ctx, const std::string& src) {
  const auto d = load(ctx, src);
  const Decomposition parts = decompose(as_lin(d, "decompose"));
  switch (ctx.opt.fmt()) {
    case Format::Table:
      ctx.out << "degenerating: " << summary(parts.degenerating) << '\n'
              << "reversible: " << summary(parts.reversible) << '\n';
      break;
    case Format::Csv:
      print_csv(ctx.out, {{"part", "charpoly", "init"},
                          {"degenerating", to_string(parts.degenerating.charpoly()),
                           values_str(parts.degenerating.init())},
                          {"reversible", to_string(parts.reversible.charpoly()),
                           values_str(parts.reversible.init())}});
      break;
    case Format::Json:
      print_json(ctx.out, {{"degenerating", descriptor_json(parts.degenerating, d.name + "_deg")},
                           {"reversible", descriptor_json(parts.reversible, d.name + "_rev")}});
      break;
  }
}

void cmd_period(const Context& ctx, const std::string& src) {
  const auto d = load(ctx, src);
  const Period p = period(as_lin(d, "period"));
  switch (ctx.opt.fmt()) {
    case Format::Table:
      ctx.out << "d=" << p.preperiod << " t=" << p.period << '\n';
      break;
    case Format::Csv:
      print_csv(ctx.out, {{"d", "t"}, {std::to_string(p.preperiod), std::to_string(p.period)}});
      break;
    case Format::Json:
      print_json(ctx.out, {{"preperiod", p.preperiod}, {"period", p.period}});
      break;
  }
}

void cmd_annihilates(const Context& ctx, const std::string& g_text, const std::string& src) {
  const auto d = load(ctx, src);
  const auto& u = as_lin(d, "annihilates");
  const bool yes = annihilates(io::parse_poly_text(u.ring(), g_text), u);
  if (ctx.opt.fmt() == Format::Json) {
    print_json(ctx.out, yes);
  } else {
    ctx.out << (yes ? "true" : "false") << '\n';
  }
}

template <class Pair>
void emit_pairs(const Context& ctx, const std::vector<Pair>& pairs, const std::vector<std::string>& t_text,
                const std::vector<json>& t_json, const std::string& name) {
  switch (ctx.opt.fmt()) {
    case Format::Table:
      for (std::size_t t = 0; t < pairs.size(); ++t) {
        ctx.out << "t=" << t_text[t] << ": left [" << summary(pairs[t].left) << "] (x) right ["
                << summary(pairs[t].right) << "]\n";
      }
      break;
    case Format::Csv: {
      Rows rows{{"t", "left", "right"}};
      for (std::size_t t = 0; t < pairs.size(); ++t) {
        rows.push_back({t_text[t], summary(pairs[t].left), summary(pairs[t].right)});
      }
      print_csv(ctx.out, rows);
      break;
    }
    case Format::Json: {
      json a = json::array();
      for (std::size_t t = 0; t < pairs.size(); ++t) {
        a.push_back({{"t", t_json[t]},
                     {"left", descriptor_json(pairs[t].left, "x^" + t_text[t] + "->" + name)},
                     {"right", descriptor_json(pairs[t].right, "e_" + t_text[t])}});
      }
      print_json(ctx.out, a);
      break;
    }
  }
}

void cmd_delta(const Context& ctx, const std::string& src) {
  const auto d = load(ctx, src);
  std::vector<std::string> t_text;
  std::vector<json> t_json;
  if (const auto* w = std::get_if<KSeq>(&d.seq)) {
    const auto pairs = k_delta(*w);
    for (const auto& t : w->chain()) {
      t_text.push_back(index_str(t));
      t_json.emplace_back(t);
    }
    emit_pairs(ctx, pairs, t_text, t_json, d.name);
    return;
  }
  const auto pairs = delta(as_lin(d, "delta"));
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    t_text.push_back(std::to_string(t));
    t_json.emplace_back(t);
  }
  emit_pairs(ctx, pairs, t_text, t_json, d.name);
}

void cmd_kseq_impulse(const Context& ctx, const std::vector<std::string>& elem_text, const std::string& t_text) {
  const RingSpec ring = io::parse_ring(ctx.opt.ring.empty() ? "Z" : ctx.opt.ring);
  std::vector<Poly> elem;
  for (const auto& e : elem_text) elem.push_back(io::parse_poly_text(ring, e));
  const MultiIndex t = parse_multi_index(t_text);
  emit_descriptor(ctx, k_impulse(std::move(elem), t), out_name(ctx, "e_" + index_str(t)));
}

void cmd_kseq_separable(const Context& ctx, const std::vector<std::string>& srcs, bool product) {
  std::vector<LinRecSeq> us;
  std::vector<std::string> names;
  for (const auto& s : srcs) {
    const auto d = load(ctx, s);
    us.push_back(as_lin(d, product ? "kseq sep-product" : "kseq sep-sum"));
    names.push_back(d.name);
  }
  const KSeq w = product ? sep_product(us) : sep_sum(us);
  emit_descriptor(ctx, w, out_name(ctx, join(names, product ? "*" : "+")));
}

// ---------------------------------------------------------------- dispatch

void report(const Context& ctx, std::ostream& err, int code, const std::string& msg) {
  err << "error: " << msg << '\n';
  if (ctx.opt.fmt() == Format::Json) print_json(ctx.out, {{"status", code}, {"error", msg}});
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact computation with linearly recursive sequences over Z and Z/m.", "linrec"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--ring", opt.ring, "Ring: Z, Z/<m>, or its JSON form; overrides descriptor rings");
  app.add_option("--from", opt.from, "First index");
  app.add_option("--to", opt.to, "Last index (inclusive)");
  app.add_flag("--charpoly-only", opt.charpoly_only, "Print only the characteristic polynomial(s)");
  app.add_option("--name", opt.name, "Name for emitted descriptors");

  const std::string desc_help = "Descriptor: a file, '-' for stdin, or inline JSON";
  std::string src, src2, op, poly_text, t_text;
  std::vector<std::string> srcs, at, elem;
  bool via_gamma = false;

  auto* eval = app.add_subcommand("eval", "Evaluate terms over --from..--to");
  eval->add_option("descriptor", src, desc_help)->required();

  auto* combine = app.add_subcommand("combine", "Hadamard product, Hurwitz product or sum of two sequences");
  combine->add_option("op", op, "hadamard | hurwitz | sum")
      ->required()
      ->check(CLI::IsMember({"hadamard", "hurwitz", "sum"}));
  combine->add_option("a", src, desc_help)->required();
  combine->add_option("b", src2, desc_help)->required();

  auto* reverse_cmd = app.add_subcommand("reverse", "Values of Rev(u) over --from..--to (default -4..4)");
  reverse_cmd->add_option("descriptor", src, desc_help)->required();
  reverse_cmd->add_flag("--gamma", via_gamma, "Split off the x-power first (non-reversible f over Z/m)");

  auto* split = app.add_subcommand("split", "Find x^d q in (f) with q reversible");
  split->add_option("poly", poly_text, "Monic polynomial, e.g. x^2+2, or its JSON form")->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "Degenerating + reversible decomposition over Z/m");
  decompose_cmd->add_option("descriptor", src, desc_help)->required();

  auto* period_cmd = app.add_subcommand("period", "Preperiod and period over Z/m");
  period_cmd->add_option("descriptor", src, desc_help)->required();

  auto* annihilates_cmd = app.add_subcommand("annihilates", "Does g annihilate the sequence?");
  annihilates_cmd->add_option("poly", poly_text, "Polynomial g")->required();
  annihilates_cmd->add_option("descriptor", src, desc_help)->required();

  auto* delta_cmd = app.add_subcommand("delta", "Comultiplication: the pairs (x^t -> u) (x) e_t");
  delta_cmd->add_option("descriptor", src, desc_help)->required();

  auto* kseq = app.add_subcommand("kseq", "k-dimensional sequences");
  kseq->require_subcommand(1);
  kseq->fallthrough();
  auto* k_eval = kseq->add_subcommand("eval", "Evaluate at --at points or on the box [--from, --to]^k");
  k_eval->add_option("descriptor", src, desc_help)->required();
  k_eval->add_option("--at", at, "Point such as 3,4 (repeatable)");
  auto* k_impulse_cmd = kseq->add_subcommand("impulse", "The impulse k-sequence e_t");
  k_impulse_cmd->add_option("--elem", elem, "Elementary polynomial per axis (repeatable)")->required();
  k_impulse_cmd->add_option("--t", t_text, "Point t of the polyhedron, e.g. 1,0")->required();
  auto* k_sum = kseq->add_subcommand("sep-sum", "n -> u_1(n_1) + ... + u_k(n_k)");
  k_sum->add_option("descriptors", srcs, desc_help)->required();
  auto* k_prod = kseq->add_subcommand("sep-product", "n -> u_1(n_1) * ... * u_k(n_k)");
  k_prod->add_option("descriptors", srcs, desc_help)->required();
  auto* k_delta_cmd = kseq->add_subcommand("delta", "Comultiplication of a k-sequence");
  k_delta_cmd->add_option("descriptor", src, desc_help)->required();
  auto* k_rev = kseq->add_subcommand("reverse", "Birecursive extension at --at points or on a box");
  k_rev->add_option("descriptor", src, desc_help)->required();
  k_rev->add_option("--at", at, "Point such as -4,-4 (repeatable)");

  for (auto* sub : {eval, combine, reverse_cmd, split, decompose_cmd, period_cmd, annihilates_cmd, delta_cmd,
                    k_eval, k_impulse_cmd, k_sum, k_prod, k_delta_cmd, k_rev}) {
    sub->fallthrough();
  }

  const Context ctx{opt, in, out};
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kOk;
    if (opt.fmt() == Format::Json) print_json(out, {{"status", int{kParse}}, {"error", e.what()}});
    return kParse;
  }

  try {
    if (eval->parsed()) cmd_eval(ctx, src);
    else if (combine->parsed()) cmd_combine(ctx, op, src, src2);
    else if (reverse_cmd->parsed()) cmd_reverse(ctx, src, via_gamma);
    else if (split->parsed()) cmd_split(ctx, poly_text);
    else if (decompose_cmd->parsed()) cmd_decompose(ctx, src);
    else if (period_cmd->parsed()) cmd_period(ctx, src);
    else if (annihilates_cmd->parsed()) cmd_annihilates(ctx, poly_text, src);
    else if (delta_cmd->parsed()) cmd_delta(ctx, src);
    else if (k_eval->parsed()) kseq_values(ctx, load(ctx, src), at, false);
    else if (k_impulse_cmd->parsed()) cmd_kseq_impulse(ctx, elem, t_text);
    else if (k_sum->parsed()) cmd_kseq_separable(ctx, srcs, false);
    else if (k_prod->parsed()) cmd_kseq_separable(ctx, srcs, true);
    else if (k_delta_cmd->parsed()) cmd_delta(ctx, src);
    else if (k_rev->parsed()) kseq_values(ctx, load(ctx, src), at, true);
  } catch (const ParseError& e) {
    report(ctx, err, kParse, e.what());
    return kParse;
  } catch (const UnsupportedRing& e) {
    report(ctx, err, kUnsupportedRing, e.what());
    return kUnsupportedRing;
  } catch (const DomainError& e) {
    report(ctx, err, kDomain, e.what());
    return kDomain;
  } catch (const std::exception& e) {
    report(ctx, err, kFailure, e.what());
    return kFailure;
  }
  return kOk;
}

}  // namespace linrec::cli
