#include "splitgraph/conjugacy.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace splitgraph {

std::optional<Path> BlockCode::apply(const Path& p) const {
  const std::size_t w = window();
  if (p.size() < w) return Path{};
  Path out;
  out.reserve(p.size() - w + 1);
  for (std::size_t i = 0; i + w <= p.size(); ++i) {
    auto it = table.find(Path(p.begin() + static_cast<std::ptrdiff_t>(i), p.begin() + static_cast<std::ptrdiff_t>(i + w)));
    if (it == table.end()) return std::nullopt;
    out.push_back(it->second);
  }
  return out;
}

BlockCode in_split_block_code(const DirectedGraph& g, const InSplitSpec& spec) {
  DirectedGraph target = apply_in_split(g, spec);
  const auto pairs = in_split_edge_pairs(g, spec);
  std::map<std::pair<EdgeIndex, std::size_t>, EdgeIndex> index;
  for (EdgeIndex i = 0; i < pairs.size(); ++i) index.emplace(pairs[i], i);

  BlockCode code{g, std::move(target), 0, 1, {}, std::vector<EdgeIndex>(pairs.size())};
  for (const Path& p : paths(g, 2)) code.table.emplace(p, index.at({p[0], spec.psi[p[1]]}));
  for (EdgeIndex i = 0; i < pairs.size(); ++i) code.inverse[i] = pairs[i].first;
  return code;
}

BlockCode out_split_block_code(const DirectedGraph& g, const OutSplitSpec& spec) {
  DirectedGraph target = apply_out_split(g, spec);
  const DirectedGraph rev = reversed_graph(g);
  // s = alpha o psi on g is r = alpha o psi on the reversed graph.
  const InSplitSpec as_in{spec.new_vertices, spec.alpha, spec.psi};
  const BlockCode rev_code = in_split_block_code(rev, as_in);
  const auto in_pairs = in_split_edge_pairs(rev, as_in);

  std::map<std::pair<std::size_t, EdgeIndex>, EdgeIndex> out_index;
  const auto out_pairs = out_split_edge_pairs(g, spec);
  for (EdgeIndex i = 0; i < out_pairs.size(); ++i) out_index.emplace(out_pairs[i], i);
  if (out_pairs.size() != in_pairs.size()) throw std::logic_error("out-split edge count disagrees with reversed in-split");

  // Reversed in-split edge (e, y) is out-split edge (y, e) with endpoints swapped back.
  std::vector<EdgeIndex> translate(in_pairs.size());
  for (EdgeIndex i = 0; i < in_pairs.size(); ++i) {
    const EdgeIndex j = out_index.at({in_pairs[i].second, in_pairs[i].first});
    const Edge& via_rev = rev_code.target.edge(i);
    const Edge& direct = target.edge(j);
    if (via_rev.source != direct.range || via_rev.range != direct.source) {
      throw std::logic_error("reversed in-split disagrees with out-split at edge " + direct.id);
    }
    translate[i] = j;
  }

  BlockCode code{g, std::move(target), rev_code.anticipation, rev_code.memory, {},
                 std::vector<EdgeIndex>(out_pairs.size())};
  for (const auto& [window, image] : rev_code.table) code.table.emplace(Path(window.rbegin(), window.rend()), translate[image]);
  for (EdgeIndex j = 0; j < out_pairs.size(); ++j) code.inverse[j] = out_pairs[j].second;
  return code;
}

std::string CertificateReport::to_string() const {
  std::ostringstream os;
  os << (passed() ? "PASS" : "FAIL") << " L=" << window << " source-paths " << source_paths << " target-paths "
     << target_paths << " image " << image_size << '\n';
  for (const auto& f : failures) os << "  " << f << '\n';
  return os.str();
}

CertificateReport verify_certificate(const BlockCode& code, std::size_t window) {
  if (window < 2) throw std::invalid_argument("verify_certificate requires L >= 2");
  CertificateReport report;
  report.window = window;
  const std::size_t span = window + code.memory + code.anticipation;
  const auto source_paths = paths(code.source, span);
  const auto target_paths = paths(code.target, window);
  report.source_paths = source_paths.size();
  report.target_paths = target_paths.size();

  auto fail = [&](const Path& p, const std::string& what) {
    report.failures.push_back(what + " at source path " + path_label(code.source, p));
  };

  std::map<Path, Path> preimage;  // image -> source coordinates [memory, memory + L)
  for (const Path& p : source_paths) {
    const auto image = code.apply(p);
    if (!image) {
      fail(p, "window missing from block map");
      continue;
    }
    if (image->size() != window || !is_path(code.target, *image)) {
      fail(p, "image is not a target path");
      continue;
    }
    const Path core(p.begin() + static_cast<std::ptrdiff_t>(code.memory),
                    p.begin() + static_cast<std::ptrdiff_t>(code.memory + window));
    auto [it, fresh] = preimage.emplace(*image, core);
    if (!fresh && it->second != core) fail(p, "not injective: image shared with " + path_label(code.source, it->second));

    const auto shifted = code.apply(Path(p.begin() + 1, p.end()));
    if (!shifted || *shifted != Path(image->begin() + 1, image->end())) fail(p, "does not commute with the shift");

    Path back;
    for (EdgeIndex f : *image) back.push_back(f < code.inverse.size() ? code.inverse[f] : code.source.edge_count());
    if (back != core) fail(p, "1-block inverse does not recover the source");
  }
  report.image_size = preimage.size();
  for (const Path& q : target_paths) {
    if (!preimage.count(q)) {
      report.failures.push_back("not surjective: target path " + path_label(code.target, q) + " is not hit");
    }
  }
  if (report.failures.empty() && report.image_size != report.target_paths) {
    report.failures.push_back("image count differs from target path count");
  }
  return report;
}

namespace {

std::string join(const std::vector<BigInt>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

const char* verdict(bool ok) { return ok ? "agree" : "DIFFER"; }

}  // namespace

std::string InvariantReport::to_string() const {
  std::ostringstream os;
  os << "traces n<=" << horizon << ": " << verdict(traces_agree()) << '\n';
  os << "  A: " << join(traces_a) << '\n';
  os << "  B: " << join(traces_b) << '\n';
  for (std::size_t k = 0; k < traces_a.size(); ++k) {
    if (traces_a[k] != traces_b[k]) {
      os << "  first mismatch: tr A^" << k + 1 << " = " << traces_a[k] << ", tr B^" << k + 1 << " = " << traces_b[k]
         << '\n';
      break;
    }
  }
  os << "det(I-uA): " << verdict(poly_agree()) << '\n';
  os << "  A: " << poly_a.to_string() << '\n';
  os << "  B: " << poly_b.to_string() << '\n';
  os << "Bowen-Franks: " << verdict(bf_agree()) << '\n';
  os << "  A: " << bf_a.to_string() << '\n';
  os << "  B: " << bf_b.to_string() << '\n';
  return os.str();
}

InvariantReport invariant_report(const IntMatrix& a, const IntMatrix& b, std::size_t n) {
  InvariantReport r;
  r.horizon = n;
  r.traces_a = trace_sequence(a, n);
  r.traces_b = trace_sequence(b, n);
  r.poly_a = weighted_char_poly(a);
  r.poly_b = weighted_char_poly(b);
  r.bf_a = bowen_franks(a);
  r.bf_b = bowen_franks(b);
  return r;
}

}  // namespace splitgraph
