#include "gibberline/synthetic.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string_view>

#include "gibberline/error.hpp"

namespace gibberline::synthetic {
namespace {

constexpr std::string_view kNouns =
    "algorithm architecture bandwidth cache checksum compiler configuration congestion "
    "consensus database deadlock encryption epistemology extension framework gateway "
    "hierarchy heuristic interrupt kernel latency lattice ledger locality methodology "
    "microkernel middleware multicast network object ontology overlay packet paradigm "
    "partition pipeline protocol quantum queue redundancy replication router scheduler "
    "semaphore sensor simulation spreadsheet superblock symmetry taxonomy theorem "
    "throughput topology transistor vector workload archetype automaton bitmap bytecode "
    "channel checkpoint cipher cluster codebase coherence complexity compression "
    "connectivity constraint controller corpus crossbar datagram debugger decoder "
    "dictionary digest directory disk emulator entropy epoch estimator evaluator "
    "firewall firmware flipflop frontier genome grammar granularity graph hash "
    "hypervisor index inference interface interpreter invariant journal keyboard "
    "lambda linker loader manifold mesh metadata metric microprocessor modem module "
    "monitor mutex namespace neuron node operand optimizer oracle parser payload "
    "permutation pointer polynomial predicate preprocessor primitive probe processor "
    "proxy qubit randomization reactor recursion refinement register regression "
    "renderer repository resolver robot runtime sandbox schema segment semantics "
    "serializer server signature solver spectrum stack storage subsystem switch "
    "synthesis tableau telemetry tensor terminal thread timestamp token trace "
    "transaction tree tuple unification validator variable verifier vertex voxel "
    "wavelet webcam widget wrapper allocator amplifier antenna backbone benchmark "
    "blockchain bootloader broker buffer certificate chipset classifier codec "
    "coroutine cryptosystem cursor daemon dataflow decision descriptor driver "
    "enclave endpoint exception fabric filter fingerprint flowchart fragment "
    "garbage hologram hotspot hypergraph iterator joystick keystroke laptop "
    "library mainframe matrix memory microcode migration mirror multiplexer "
    "notebook oscillator pagefile parity peer pixel planner portal prefetcher "
    "prototype pulse quorum radix raster rasterizer reasoner relation rewriter "
    "sampler sharding shader snapshot socket spooler statistic steganography "
    "stream substrate supercomputer surrogate telephony template tokenizer "
    "trajectory transducer transformer tunnel typesystem unikernel upgrade "
    "virtualization visualization waveform wireless";

constexpr std::string_view kAdjectives =
    "adaptive ambimorphic atomic autonomous bayesian client-server collaborative "
    "concurrent decentralized deterministic distributed dynamic efficient electronic "
    "empathic encrypted ergodic extensible flexible fuzzy game-theoretic heterogeneous "
    "homogeneous interactive introspective knowledge-based large-scale linear lossless "
    "low-energy mobile modular multimodal omniscient optimal peer-to-peer perfect "
    "permutable pervasive probabilistic psychoacoustic random read-write real-time "
    "relational reliable robust scalable secure semantic signed stable stochastic "
    "symbiotic trainable ubiquitous unstable virtual wearable wireless-capable "
    "cacheable classical cooperative compact authenticated lightweight metamorphic "
    "replicated sparse temporal unified";

constexpr std::string_view kSurnames =
    "adleman bachman backus blum brooks clark codd corbato culler dahl daubechies "
    "dijkstra engelbart estrin feigenbaum floyd garcia gray hamming hartmanis hoare "
    "hopcroft iverson jackson jacobson johnson kahan karp knuth kobayashi kubiatowicz "
    "lamport lampson leiserson levy martin maruyama mccarthy milner minsky moore "
    "morrison needham newell nygaard papadimitriou patterson perlis pnueli qian "
    "rabin raman ramasubramanian reddy ritchie rivest sasaki schroedinger scott "
    "shamir shastri shenker simon smith stallman stearns sutherland suzuki tanenbaum "
    "tarjan thompson turing ullman watanabe welsh wilkes williams wirth zhao zheng";

constexpr std::string_view kTitleTemplates[] = {
    "{A} {N} for {A} {N}",
    "On the {N} of {A} {N}",
    "Towards the {N} of {N} and {N}",
    "{N}: {A} {N} for {N}",
    "The Impact of {A} {N} on {N}",
    "Deconstructing {N} with {A} {N}",
};

constexpr std::string_view kAbstractTemplates[] = {
    "The {A} {N} has been widely studied in the context of {N}.",
    "In this paper we present a {A} {N} for {N} and {N}.",
    "We show that {A} {N} can be made {A} and {A}.",
    "Our results indicate that the {N} improves the {N} by a wide margin.",
    "We evaluate the {N} against {A} {N} on {A} {N} workloads.",
    "Many researchers would agree that the {N} of {A} {N} is an open problem.",
    "Our {N} addresses the {N} of the {A} {N} directly.",
};

constexpr std::string_view kBodyTemplates[] = {
    "Our {A} {N} is built on the principles of {N} and {N}.",
    "We show that the {N} of our {N} is largely independent of the {A} {N}.",
    "In this section we describe the {N} behind {A} {N}.",
    "The {N} consists of a {A} {N}, a {N} and a {A} {N}.",
    "Although the {A} {N} is rarely at odds with the {N}, the {N} must run in {A} time.",
    "Figure {num} shows the {N} of the {A} {N} as a function of the {N}.",
    "Note that the {N} grows as the {N} decreases, a property of {A} {N}.",
    "Our experiments with the {N} and the {A} {N} yield {A} results.",
    "Prior work on {N} focused on {A} {N} rather than {N} [{cite}].",
    "Several {A} {N} designs have been proposed for the {N} problem [{cite}], but none address the {N}.",
    "We evaluated the {N} on a cluster of {num} {A} machines running the {N}.",
    "The {N} of the {N} is bounded by the {A} {N} of each {N}.",
    "Clearly, the {A} {N} improves the {N} without sacrificing the {N}.",
    "This {N} relies on the assumption that the {N} is {A}.",
    "To address this {N}, we introduce a {A} {N} for {N}.",
    "Our {N} outperforms the {A} {N} in terms of {N} and {N}.",
    "Measurements of the {N} under {A} load confirm the {N} of the {N}.",
    "A {A} {N} was used to compare the {N} against the {N}.",
    "The remainder of the {N} follows from the {A} {N} of the {N}.",
    "We used a {A} {N} to construct the {N} and the {N} of the system.",
    "Each {N} stores its {N} in a {A} {N}, which keeps the {N} small.",
    "When the {N} fails, the {A} {N} recovers the {N} from the {N}.",
};

constexpr std::string_view kSectionTitles[] = {
    "Related Work", "Design", "Implementation", "Evaluation", "Discussion", "Conclusion",
};

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::istringstream in{std::string(text)};
  for (std::string w; in >> w;) words.push_back(std::move(w));
  return words;
}

std::size_t below(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t between(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + below(rng, hi - lo + 1);
}

template <typename T, std::size_t N>
const T& pick(std::mt19937_64& rng, const T (&items)[N]) {
  return items[below(rng, N)];
}

const std::string& pick(std::mt19937_64& rng, const std::vector<std::string>& items) {
  return items[below(rng, items.size())];
}

std::string capitalize(std::string s) {
  if (!s.empty() && s.front() >= 'a' && s.front() <= 'z') s.front() = static_cast<char>(s.front() - 'a' + 'A');
  return s;
}

// Keyword source for template slots.
class SlotFiller {
 public:
  virtual ~SlotFiller() = default;
  virtual std::string noun(std::mt19937_64& rng, double focus) = 0;
  virtual std::string adjective(std::mt19937_64& rng, double focus) = 0;
};

class UniformFiller : public SlotFiller {
 public:
  std::string noun(std::mt19937_64& rng, double) override { return pick(rng, technical_nouns()); }
  std::string adjective(std::mt19937_64& rng, double) override {
    return pick(rng, technical_adjectives());
  }
};

// Zipf-weighted topic pool with a uniform background. `focus` scales how
// strongly a section sticks to the topic.
class TopicFiller : public SlotFiller {
 public:
  explicit TopicFiller(std::mt19937_64& rng) {
    nouns_ = sample_pool(rng, technical_nouns(), between(rng, 8, 24));
    adjectives_ = sample_pool(rng, technical_adjectives(), between(rng, 2, 5));
    topic_share_ = 0.30 + 0.35 * unit(rng);
  }

  std::string noun(std::mt19937_64& rng, double focus) override {
    return draw(rng, nouns_, technical_nouns(), focus);
  }
  std::string adjective(std::mt19937_64& rng, double focus) override {
    return draw(rng, adjectives_, technical_adjectives(), focus);
  }

 private:
  static std::vector<std::string> sample_pool(std::mt19937_64& rng,
                                              const std::vector<std::string>& all,
                                              std::size_t size) {
    std::vector<std::string> pool;
    while (pool.size() < size) {
      const std::string& w = pick(rng, all);
      if (std::find(pool.begin(), pool.end(), w) == pool.end()) pool.push_back(w);
    }
    return pool;
  }

  std::string draw(std::mt19937_64& rng, const std::vector<std::string>& pool,
                   const std::vector<std::string>& all, double focus) const {
    if (unit(rng) >= std::min(1.0, topic_share_ * focus)) return pick(rng, all);
    double total = 0.0;
    for (std::size_t r = 0; r < pool.size(); ++r) total += 1.0 / static_cast<double>(r + 1);
    double target = unit(rng) * total;
    for (std::size_t r = 0; r < pool.size(); ++r) {
      target -= 1.0 / static_cast<double>(r + 1);
      if (target < 0.0) return pool[r];
    }
    return pool.back();
  }

  std::vector<std::string> nouns_;
  std::vector<std::string> adjectives_;
  double topic_share_ = 0.6;
};

std::string fill(std::mt19937_64& rng, std::string_view templ, SlotFiller& filler, double focus,
                 std::size_t reference_count) {
  std::string out;
  std::size_t i = 0;
  while (i < templ.size()) {
    if (templ.compare(i, 3, "{N}") == 0) {
      out += filler.noun(rng, focus);
      i += 3;
    } else if (templ.compare(i, 3, "{A}") == 0) {
      out += filler.adjective(rng, focus);
      i += 3;
    } else if (templ.compare(i, 5, "{num}") == 0) {
      out += std::to_string(between(rng, 2, 64));
      i += 5;
    } else if (templ.compare(i, 6, "{cite}") == 0) {
      out += std::to_string(between(rng, 1, std::max<std::size_t>(reference_count, 1)));
      i += 6;
    } else {
      out += templ[i++];
    }
  }
  return out;
}

std::string title_case(const std::string& line) {
  std::istringstream in(line);
  std::string out;
  for (std::string w; in >> w;) {
    if (!out.empty()) out += ' ';
    out += (w == "of" || w == "for" || w == "and" || w == "on" || w == "the" || w == "with")
               ? w
               : capitalize(w);
  }
  return out;
}

std::string write_paper(std::mt19937_64& rng, SlotFiller& filler) {
  const std::size_t reference_count = between(rng, 12, 30);
  std::ostringstream out;

  out << title_case(fill(rng, pick(rng, kTitleTemplates), filler, 1.6, reference_count)) << "\n\n";
  const std::size_t authors = between(rng, 1, 4);
  const auto surnames = split_words(kSurnames);
  for (std::size_t a = 0; a < authors; ++a) {
    out << (a ? ", " : "") << capitalize(pick(rng, surnames));
  }
  out << "\n\nAbstract\n\n";
  const std::size_t abstract_sentences = between(rng, 4, 7);
  for (std::size_t s = 0; s < abstract_sentences; ++s) {
    out << (s ? " " : "") << capitalize(fill(rng, pick(rng, kAbstractTemplates), filler, 1.4, reference_count));
  }
  out << "\n\n";

  std::vector<std::string_view> sections = {"Introduction"};
  for (const auto& t : kSectionTitles) sections.push_back(t);
  for (std::size_t sec = 0; sec < sections.size(); ++sec) {
    out << sec + 1 << ' ' << sections[sec] << "\n\n";
    const std::size_t paragraphs = between(rng, 2, 4);
    for (std::size_t p = 0; p < paragraphs; ++p) {
      const std::size_t sentences = between(rng, 4, 8);
      for (std::size_t s = 0; s < sentences; ++s) {
        out << (s ? " " : "") << capitalize(fill(rng, pick(rng, kBodyTemplates), filler, 1.0, reference_count));
      }
      out << "\n\n";
    }
  }

  out << "References\n\n";
  for (std::size_t r = 1; r <= reference_count; ++r) {
    out << '[' << r << "] ";
    const std::size_t names = between(rng, 1, 3);
    for (std::size_t a = 0; a < names; ++a) {
      const std::string& initial = pick(rng, surnames);
      out << (a ? (a + 1 == names ? ", and " : ", ") : "") << capitalize(pick(rng, surnames)) << ", "
          << static_cast<char>(initial.front() - 'a' + 'A') << '.';
    }
    out << ' ' << title_case(fill(rng, pick(rng, kTitleTemplates), filler, 1.2, reference_count))
        << ". In Proceedings of the Conference on " << title_case(fill(rng, "{A} {N}", filler, 0.6, 0))
        << " (" << between(rng, 1975, 2008) << ").\n";
  }
  return out.str();
}

std::string numbered(std::string_view prefix, std::size_t i) {
  std::ostringstream name;
  name << prefix << std::setw(3) << std::setfill('0') << i << ".txt";
  return name.str();
}

}  // namespace

const std::vector<std::string>& technical_nouns() {
  static const auto words = split_words(kNouns);
  return words;
}

const std::vector<std::string>& technical_adjectives() {
  static const auto words = split_words(kAdjectives);
  return words;
}

std::string generated_paper(std::mt19937_64& rng) {
  UniformFiller filler;
  return write_paper(rng, filler);
}

std::string human_paper(std::mt19937_64& rng) {
  TopicFiller filler(rng);
  return write_paper(rng, filler);
}

std::vector<corpus::LabeledDocument> make_corpus(const Options& options) {
  std::mt19937_64 rng(options.seed);
  std::vector<corpus::LabeledDocument> docs;
  for (std::size_t i = 1; i <= options.generated_count; ++i) {
    docs.push_back({{generated_paper(rng), "generated/" + numbered("gen_", i)},
                    classifier::Label::kGenerated});
  }
  for (std::size_t i = 1; i <= options.human_count; ++i) {
    docs.push_back({{human_paper(rng), "human/" + numbered("hum_", i)}, classifier::Label::kHuman});
  }
  return docs;
}

void write_corpus(const std::filesystem::path& root, const Options& options) {
  for (const auto& doc : make_corpus(options)) {
    const auto path = root / doc.document.source_id;
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << doc.document.text;
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  }
}

}  // namespace gibberline::synthetic
