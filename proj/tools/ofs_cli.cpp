// Copyright 2026 The OFS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// ofs: key generation, signing, verification, simulator transcripts, the
// reduction game and the query-model lemma checks.
//
// Exit codes: 0 success, 1 negative result (invalid signature, violated
// bound), 2 usage error or malformed input, 3 any other failure.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "ofs/fs/fiat_shamir.hpp"
#include "ofs/fs/keyfile.hpp"
#include "ofs/oracle.hpp"
#include "ofs/presets.hpp"
#include "ofs/qstate/lemmas.hpp"
#include "ofs/qstate/suites.hpp"
#include "ofs/qstate/text_format.hpp"
#include "ofs/ro/formulas.hpp"
#include "ofs/ro/game.hpp"
#include "ofs/schemes.hpp"

namespace {

using ofs::Bytes;
using ofs::gq::GqProtocol;
using ofs::lattice::LatticeProtocol;

constexpr int kOk = 0, kNegative = 1, kUsage = 2, kFailure = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string scheme;
  std::string preset;
  std::uint64_t seed = 0;
  std::string in, out, key, sig, msg;
  bool compact = true;
  std::size_t trials = 0;
  std::string delta = "0.1";
  std::size_t q_h = 1, q_s = 0;
  double eps = 1.0;
  std::string adversary = "cooperative";
  // qcheck
  std::string lemma = "all";
  std::size_t experiments = 100;
  unsigned qubits = 8, max_input = 4, max_steps = 4;
  bool empty_modified_set = false;
};

Bytes read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ofs::Error(ofs::ErrorCode::kIoError, "cannot open " + path);
  return Bytes(std::istreambuf_iterator<char>(f), {});
}

void write_file(const std::string& path, const Bytes& data) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ofs::Error(ofs::ErrorCode::kIoError, "cannot write " + path);
  f.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!f) throw ofs::Error(ofs::ErrorCode::kIoError, "cannot write " + path);
}

// Text output goes to --out when given, else stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw ofs::Error(ofs::ErrorCode::kIoError, "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

Bytes message(const Config& c) {
  if (!c.msg.empty() && !c.in.empty()) throw UsageError("give either --msg or --in, not both");
  if (!c.msg.empty()) return Bytes(c.msg.begin(), c.msg.end());
  if (!c.in.empty()) return read_file(c.in);
  throw UsageError("a message is required (--msg or --in)");
}

ofs::Preset resolve_preset(const Config& c) {
  std::string name = c.preset;
  if (name.empty()) {
    if (c.scheme.empty() || c.scheme == "lattice") name = "t1";
    else if (c.scheme == "gq") name = "g32";
    else throw UsageError("unknown scheme '" + c.scheme + "'");
  }
  ofs::Preset p = ofs::load_preset(name);
  if (!c.scheme.empty() && c.scheme != ofs::scheme_name(p.scheme)) {
    throw UsageError("preset " + name + " is for scheme " + ofs::scheme_name(p.scheme));
  }
  return p;
}

// Calls fn(protocol) with the protocol the preset names.
template <class Fn>
int with_protocol(const ofs::Preset& p, Fn&& fn) {
  if (p.scheme == ofs::SchemeKind::kGq) return fn(GqProtocol(p.gq));
  return fn(LatticeProtocol(p.lattice));
}

// Same, dispatching on the scheme tag of a key file.
template <class Fn>
int with_key(const ofs::fs::KeyFile& file, Fn&& fn) {
  if (file.tag == GqProtocol::kTag) return fn(ofs::read_key<GqProtocol>(file));
  if (file.tag == LatticeProtocol::kTag) return fn(ofs::read_key<LatticeProtocol>(file));
  throw ofs::DecodeError(0, "unknown scheme tag " + std::to_string(file.tag));
}

int cmd_keygen(const Config& c) {
  if (c.out.empty()) throw UsageError("--out <prefix> is required");
  return with_protocol(resolve_preset(c), [&](auto protocol) {
    ofs::Rng rng(c.seed);
    const auto pair = ofs::sigma::generate_pair(protocol, rng);
    ofs::fs::save_key_file(c.out + ".pub", ofs::make_key_file(protocol, pair.statement(), nullptr));
    ofs::fs::save_key_file(c.out + ".sec", ofs::make_key_file(protocol, pair.statement(), &pair.witness()));
    std::cout << "wrote " << c.out << ".pub and " << c.out << ".sec\n";
    return kOk;
  });
}

int cmd_sign(const Config& c) {
  if (c.key.empty() || c.out.empty()) throw UsageError("--key and --out are required");
  const Bytes m = message(c);
  const auto file = ofs::fs::load_key_file(c.key);
  if (file.kind != ofs::fs::KeyKind::kSecret) throw UsageError(c.key + " is not a secret key");
  return with_key(file, [&](auto loaded) {
    using P = decltype(loaded.protocol);
    ofs::fs::FiatShamir<P> scheme(loaded.protocol);
    ofs::fs::SigningKey<P> sk{ofs::sigma::StatementWitnessPair<P>(loaded.protocol, loaded.statement, *loaded.witness)};
    ofs::Shake256Oracle oracle;
    ofs::Rng rng(c.seed);
    write_file(c.out, scheme.encode_signature(scheme.sign(sk, m, oracle, rng), c.compact));
    return kOk;
  });
}

int cmd_verify(const Config& c) {
  if (c.key.empty() || c.sig.empty()) throw UsageError("--key and --sig are required");
  const Bytes m = message(c);
  const Bytes sig_bytes = read_file(c.sig);
  return with_key(ofs::fs::load_key_file(c.key), [&](auto loaded) {
    using P = decltype(loaded.protocol);
    ofs::fs::FiatShamir<P> scheme(loaded.protocol);
    const ofs::fs::VerifyingKey<P> vk{loaded.statement};
    ofs::Shake256Oracle oracle;
    const auto sig = scheme.decode_signature(sig_bytes, vk, m, oracle);
    const bool ok = scheme.verify(vk, m, sig, oracle);
    std::cout << (ok ? "valid" : "invalid") << '\n';
    return ok ? kOk : kNegative;
  });
}

int cmd_simulate(const Config& c) {
  const std::size_t n = c.trials ? c.trials : 10;
  Output out(c.out);
  return with_protocol(resolve_preset(c), [&](auto protocol) {
    using P = decltype(protocol);
    ofs::Rng rng(c.seed);
    const auto pair = ofs::sigma::generate_pair(protocol, rng);
    const auto& x = pair.statement();
    auto& os = out.stream();
    os << "trial,source,accepted,verifies,com,ch,rsp\n";
    auto row = [&](std::size_t i, const char* src, const std::optional<ofs::sigma::Transcript<P>>& t) {
      os << i << ',' << src << ',' << int(t.has_value()) << ',';
      if (!t) {
        os << "0,,,\n";
        return;
      }
      os << int(protocol.verify(x, t->com, t->ch, t->rsp)) << ',' << ofs::to_hex(protocol.encode_commitment(t->com))
         << ',' << ofs::to_hex(protocol.encode_challenge(t->ch)) << ','
         << ofs::to_hex(protocol.encode_response(t->rsp)) << '\n';
    };
    for (std::size_t i = 0; i < n; ++i) {
      auto com = protocol.honest_commit(x, pair.witness(), rng);
      auto ch = ofs::sigma::sample_challenge(protocol, x, rng);
      auto rsp = protocol.respond(x, pair.witness(), com, ch, rng);
      std::optional<ofs::sigma::Transcript<P>> honest;
      if (rsp) honest = ofs::sigma::Transcript<P>{std::move(com), std::move(ch), std::move(*rsp)};
      row(i, "honest", honest);
      row(i, "simulated", protocol.simulate(x, rng));
    }
    return kOk;
  });
}

std::string exact(const mpq_class& v) {
  std::ostringstream s;
  s << v.get_str() << " (" << v.get_d() << ")";
  return s.str();
}

int cmd_game(const Config& c) {
  if (c.trials == 0) throw UsageError("--trials must be positive");
  if (c.q_h == 0) throw UsageError("--qh must be positive");
  if (!(c.eps > 0.0 && c.eps <= 1.0)) throw UsageError("--eps must lie in (0, 1]");
  const mpq_class eps_q(c.eps);
  mpq_class delta_q;
  if (c.delta == "optimal") {
    delta_q = ofs::ro::optimal_delta_exact(eps_q, c.q_h);
  } else {
    try {
      std::size_t used = 0;
      delta_q = std::stod(c.delta, &used);
      if (used != c.delta.size()) throw std::invalid_argument(c.delta);
    } catch (const std::logic_error&) {
      throw UsageError("--delta must be a number or 'optimal'");
    }
  }
  const double delta = delta_q.get_d();
  if (!(delta >= 0.0 && delta <= 1.0)) throw UsageError("--delta must lie in [0, 1]");

  Output out(c.out);
  ofs::Preset preset = c.preset.empty() && c.scheme.empty() ? ofs::load_preset("g32") : resolve_preset(c);
  return with_protocol(preset, [&](auto protocol) {
    using P = decltype(protocol);
    ofs::fs::FiatShamir<P> scheme(protocol);
    ofs::Rng rng(c.seed);
    auto [sk, vk] = scheme.skgen(rng);
    ofs::ro::GameAdversary<P> adversary;
    if (c.adversary == "cooperative") adversary = ofs::ro::cooperative_forger<P>(sk.pair, c.eps);
    else if (c.adversary == "replay") adversary = ofs::ro::replay_forger<P>();
    else if (c.adversary == "collision-probe") adversary = ofs::ro::collision_probe<P>();
    else throw UsageError("unknown adversary '" + c.adversary + "'");

    ofs::ro::GameConfig cfg;
    cfg.delta = delta;
    cfg.trials = c.trials;
    cfg.q_h = c.q_h;
    cfg.q_s = c.q_s;
    cfg.seed = rng.next_u64();
    const auto report = ofs::ro::run_reduction_game(scheme, vk, adversary, cfg);

    auto& os = out.stream();
    report.write_csv(os);
    os << "# scheme=" << P::kName << " preset=" << preset.name << " adversary=" << c.adversary << " eps=" << c.eps
       << '\n';
    os << "# optimal_delta(eps, q_h) = " << exact(ofs::ro::optimal_delta_exact(eps_q, c.q_h)) << '\n';
    os << "# bound_lemma4(eps, delta, q_h) = " << exact(ofs::ro::bound_lemma4_exact(eps_q, delta_q, c.q_h)) << '\n';
    os << "# bound_lemma4 at optimal delta = "
       << exact(ofs::ro::bound_lemma4_exact(eps_q, ofs::ro::optimal_delta_exact(eps_q, c.q_h), c.q_h)) << '\n';
    os << "# headline 3 eps^2 / (16 q_h^4) = " << exact(ofs::ro::headline_bound_exact(eps_q, c.q_h)) << '\n';
    return kOk;
  });
}

int cmd_qcheck(const Config& c) {
  namespace qs = ofs::qstate;
  Output out(c.out);
  if (!c.in.empty()) {
    std::ifstream f(c.in);
    if (!f) throw ofs::Error(ofs::ErrorCode::kIoError, "cannot open " + c.in);
    const std::string text((std::istreambuf_iterator<char>(f)), {});
    auto file = qs::parse_experiment(text);
    if (c.empty_modified_set) file.exp.modified_set.clear();
    ofs::Rng rng(c.seed);
    const auto table = file.table ? *file.table : qs::OracleTable::random(file.exp.regs.input, file.exp.regs.answer, rng);
    const auto modified = file.modified && !c.empty_modified_set ? *file.modified
                                                                 : qs::draw_modified_table(file.exp, table, rng);
    const auto r = qs::run_bbbv_experiment(file.exp, table, modified);
    const bool pass = r.ratio <= 2.0;
    qs::write_check_csv(out.stream(), {{c.in, 2, r.eps_sum, r.distance, r.ratio,
                                        2.0 * std::sqrt(file.exp.step_count * r.eps_sum), pass}});
    return pass ? kOk : kNegative;
  }

  qs::SuiteConfig cfg;
  cfg.seed = c.seed;
  if (c.lemma != "all") {
    cfg.lemma1 = c.lemma == "1";
    cfg.lemma2 = c.lemma == "2";
    cfg.lemma3 = c.lemma == "3";
    if (!cfg.lemma1 && !cfg.lemma2 && !cfg.lemma3) throw UsageError("--lemma must be 1, 2, 3 or all");
  }
  if (c.trials) cfg.lemma3_trials = c.trials;
  cfg.lemma2_experiments = c.experiments;
  cfg.lemma1_max_qubits = c.qubits;
  cfg.lemma2_max_input = c.max_input;
  cfg.lemma2_max_steps = c.max_steps;
  cfg.empty_modified_set = c.empty_modified_set;
  try {
    qs::check_suite_config(cfg);
  } catch (const ofs::Error& e) {
    throw UsageError(e.what());
  }
  const auto rows = qs::run_suites(cfg);
  qs::write_check_csv(out.stream(), rows);
  std::size_t failed = 0;
  for (const auto& r : rows) failed += !r.pass;
  if (failed) std::cerr << failed << " of " << rows.size() << " checks failed\n";
  return failed ? kNegative : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fiat-Shamir signatures from oblivious-commitment Sigma protocols"};
  app.require_subcommand(1);
  Config c;

  auto scheme_opts = [&](CLI::App* s) {
    s->add_option("--scheme", c.scheme, "lattice or gq")->check(CLI::IsMember({"lattice", "gq"}));
    s->add_option("--preset", c.preset, "preset name (t0, t1, g16, g32 or a file on OFS_PRESET_DIR)");
    s->add_option("--seed", c.seed, "master seed");
  };

  auto* keygen = app.add_subcommand("keygen", "write <prefix>.pub and <prefix>.sec");
  scheme_opts(keygen);
  keygen->add_option("--out", c.out, "output prefix");

  auto* sign = app.add_subcommand("sign", "sign a message with a secret key");
  sign->add_option("--key", c.key, "secret key file");
  sign->add_option("--in", c.in, "message file");
  sign->add_option("--msg", c.msg, "message given inline");
  sign->add_option("--out", c.out, "signature file");
  sign->add_option("--seed", c.seed, "signing randomness seed");
  sign->add_flag("--compact,!--full", c.compact, "compact (default) or full signature form");

  auto* verify = app.add_subcommand("verify", "exit 0 if valid, 1 if invalid, 2 if undecodable");
  verify->add_option("--key", c.key, "public or secret key file");
  verify->add_option("--in", c.in, "message file");
  verify->add_option("--msg", c.msg, "message given inline");
  verify->add_option("--sig", c.sig, "signature file");

  auto* simulate = app.add_subcommand("simulate", "honest and simulated transcripts as CSV");
  scheme_opts(simulate);
  simulate->add_option("--trials", c.trials, "transcript pairs (default 10)");
  simulate->add_option("--out", c.out, "CSV file (default stdout)");

  auto* game = app.add_subcommand("game", "run the reduction game and print its CSV report");
  scheme_opts(game);
  game->add_option("--trials", c.trials, "number of trials")->required();
  game->add_option("--delta", c.delta, "semi-constant fraction, or 'optimal'");
  game->add_option("--qh", c.q_h, "hash queries per trial");
  game->add_option("--qs", c.q_s, "signing queries per trial");
  game->add_option("--eps", c.eps, "forger success probability (cooperative forger)");
  game->add_option("--adversary", c.adversary, "cooperative, replay or collision-probe");
  game->add_option("--out", c.out, "CSV file (default stdout)");

  auto* qcheck = app.add_subcommand("qcheck", "statevector checks of the query-model lemmas");
  qcheck->add_option("--seed", c.seed, "master seed");
  qcheck->add_option("--lemma", c.lemma, "1, 2, 3 or all");
  qcheck->add_option("--trials", c.trials, "oracle draws per lemma-3 distinguisher (default 10000)");
  qcheck->add_option("--experiments", c.experiments, "random lemma-2 experiments");
  qcheck->add_option("--qubits", c.qubits, "largest lemma-1 state, in qubits");
  qcheck->add_option("--max-input", c.max_input, "largest lemma-2 input register");
  qcheck->add_option("--max-steps", c.max_steps, "most lemma-2 queries");
  qcheck->add_flag("--empty-modified-set", c.empty_modified_set, "clear every lemma-2 modified set");
  qcheck->add_option("--in", c.in, "run one lemma-2 experiment from a description file");
  qcheck->add_option("--out", c.out, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*keygen) return cmd_keygen(c);
    if (*sign) return cmd_sign(c);
    if (*verify) return cmd_verify(c);
    if (*simulate) return cmd_simulate(c);
    if (*game) return cmd_game(c);
    if (*qcheck) return cmd_qcheck(c);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ofs::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    const auto code = e.code();
    if (code == ofs::ErrorCode::kDecodeError || code == ofs::ErrorCode::kIoError) return kUsage;
    if (code == ofs::ErrorCode::kUnsupportedParameters) return kUsage;
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
