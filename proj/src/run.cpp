#include "cartier/run.hpp"

#include <sstream>

#include "cartier/jumping.hpp"
#include "cartier/oracles.hpp"

namespace cartier {

namespace {

constexpr const char* kVersion = "cartier 1.0.0";

struct Job {
  RingCtx ctx;
  CartierAlgebra algebra;
  std::optional<Ideal> pair_a;
  std::optional<Rational> pair_t;
  std::optional<Poly> test_element;
  std::optional<std::vector<Ideal>> minimal_primes;
  std::optional<std::vector<Poly>> radical;
  bool domain;
  EvalOptions eval;
};

Job build_job(const JobConfig& cfg) {
  RingCtx ctx = [&] {
    if (cfg.quotient.empty())
      return RingCtx::polynomial_ring(cfg.p, cfg.vars);
    RingCtx base = RingCtx::polynomial_ring(cfg.p, cfg.vars);
    std::vector<Poly> qgens;
    for (const auto& s : cfg.quotient) qgens.push_back(base.parse(s));
    return RingCtx::quotient_ring(cfg.p, cfg.vars, qgens);
  }();
  std::vector<CartierOp> ops;
  for (const auto& spec : cfg.generators)
    ops.push_back(CartierOp(ctx, spec.e, ctx.parse(spec.f)));
  CartierAlgebra algebra(ctx, std::move(ops));

  Job job{ctx, std::move(algebra), {}, {}, {}, {}, {}, cfg.domain, {}};
  if (cfg.pair_a) {
    std::vector<Poly> agens;
    for (const auto& s : *cfg.pair_a) agens.push_back(ctx.parse(s));
    job.pair_a = Ideal(ctx, std::move(agens));
  }
  if (cfg.pair_t) job.pair_t = Rational::parse(*cfg.pair_t);
  if (cfg.test_element) job.test_element = ctx.parse(*cfg.test_element);
  if (cfg.minimal_primes) {
    std::vector<Ideal> primes;
    for (const auto& gens : *cfg.minimal_primes) {
      std::vector<Poly> ps;
      for (const auto& s : gens) ps.push_back(ctx.parse(s));
      primes.push_back(Ideal(ctx, std::move(ps)));
    }
    job.minimal_primes = std::move(primes);
  }
  if (cfg.radical) {
    RingCtx base = RingCtx::polynomial_ring(cfg.p, cfg.vars);
    std::vector<Poly> rgens;
    for (const auto& s : *cfg.radical) rgens.push_back(base.parse(s));
    job.radical = std::move(rgens);
  }
  job.eval.e_cap = cfg.e_cap;
  job.eval.word_limit = cfg.word_limit;
  return job;
}

std::string ring_str(const RingCtx& ctx) {
  std::string s = "F_" + std::to_string(ctx.p()) + "[";
  for (std::size_t i = 0; i < ctx.nvars(); ++i) {
    if (i) s += ",";
    s += ctx.vars()[i];
  }
  s += "]";
  if (ctx.has_quotient()) {
    s += "/(";
    for (std::size_t i = 0; i < ctx.quotient_gens().size(); ++i) {
      if (i) s += ", ";
      s += ctx.quotient_gens()[i].str(ctx.vars());
    }
    s += ")";
  }
  return s;
}

void header(std::ostringstream& out, const JobConfig& cfg, const Job& job) {
  out << kVersion << "\n";
  out << "task = " << cfg.task << "\n";
  out << "p = " << cfg.p << "\n";
  out << "ring = " << ring_str(job.ctx) << "\n";
  out << "e-cap = " << cfg.e_cap << "\n";
  out << "word-limit = " << cfg.word_limit << "\n";
  if (job.pair_a) {
    out << "pair-a = " << job.pair_a->str() << "\n";
    if (job.pair_t) out << "pair-t = " << job.pair_t->str() << "\n";
  }
}

std::string checks_str(const TestElementChecks& c) {
  std::string s;
  s += c.in_r_circ ? "R-circ ok" : "R-circ FAIL";
  s += c.t_independent ? ", t-independent ok" : ", t-independent FAIL";
  s += c.closure_fpure ? ", F-pure ok" : ", F-pure FAIL";
  s += c.generic_agreement ? ", generic ok" : ", generic FAIL";
  return s;
}

void tau_body(std::ostringstream& out, const RingCtx& ctx, const TauResult& r) {
  out << "underline = " << r.underline_m.str() << "\n";
  if (!r.verified.empty()) {
    out << "test-element = " << r.test_element.c.str(ctx.vars())
        << " [product of " << r.verified.size() << " verified; "
        << checks_str(r.test_element.checks) << "]\n";
    for (const auto& v : r.verified)
      out << "  candidate " << v.c.str(ctx.vars()) << " (" << v.origin
          << "): verified\n";
  }
  out << "tau = " << r.tau.str() << "\n";
  out << "F-pure-certified: " << (r.fpure_certified ? "yes" : "no") << "\n";
  out << "regeneration-checks: " << (r.regeneration_ok ? "ok" : "FAIL") << "\n";
}

CartierAlgebra maybe_twist(const Job& job) {
  if (job.pair_a && job.pair_t && !job.pair_t->is_zero())
    return job.algebra.with_twist({*job.pair_a, *job.pair_t});
  return job.algebra;
}

RunResult dispatch(const JobConfig& cfg) {
  Job job = build_job(cfg);
  std::ostringstream out;
  header(out, cfg, job);
  const RingCtx& ctx = job.ctx;
  Ideal R = Ideal::unit(ctx);

  if (cfg.task == "underline") {
    CartierAlgebra C = maybe_twist(job);
    FpureReport rep = underline(C, R, job.eval);
    for (std::size_t k = 0; k < rep.chain.size(); ++k)
      out << "chain[" << k << "] = " << rep.chain[k].str() << "\n";
    out << "stable-at = " << rep.stable_at << "\n";
    out << "underline = " << rep.underline.str() << "\n";
    out << "F-pure: " << (rep.is_fpure ? "yes" : "no") << "\n";
    if (rep.nilpotency_order)
      out << "nilpotent: order " << *rep.nilpotency_order << "\n";
    else
      out << "nilpotent: no\n";
    return {out.str(), 0};
  }

  if (cfg.task == "fpure") {
    CartierAlgebra C = maybe_twist(job);
    bool pure = is_fpure(C, R, job.eval);
    if (!pure) {
      out << "F-pure: no\n";
      return {out.str(), 0};
    }
    std::string line = "F-pure: yes";
    if (!C.twisted()) {
      auto w = fpure_witness(C, job.eval);
      if (w) {
        line += "; witness: e=" + std::to_string(w->op.e()) +
                ", g=" + w->g.str(ctx.vars());
        out << line << "\n";
        out << "witness-operator: e=" << w->op.e()
            << ", f=" << w->op.f().str(ctx.vars())
            << (w->single_word ? " (word)" : " (combined)") << "\n";
        return {out.str(), 0};
      }
    }
    out << line << "\n";
    return {out.str(), 0};
  }

  if (cfg.task == "tau") {
    CartierAlgebra C = maybe_twist(job);
    TauResult r = tau(C, R, job.test_element, job.minimal_primes, job.domain,
                      job.eval);
    tau_body(out, ctx, r);
    return {out.str(), 0};
  }

  if (cfg.task == "tau-nonreduced") {
    TauResult r = tau_nonreduced(job.algebra, job.radical, job.test_element,
                                 job.minimal_primes, job.eval);
    tau_body(out, ctx, r);
    return {out.str(), 0};
  }

  if (cfg.task == "fregular") {
    CartierAlgebra C = maybe_twist(job);
    bool reg = is_fregular(C, R, job.test_element, job.minimal_primes,
                           job.domain, job.eval);
    out << "F-regular: " << (reg ? "yes" : "no") << "\n";
    return {out.str(), 0};
  }

  if (cfg.task == "jumps" || cfg.task == "fpt") {
    if (!job.pair_a) fail(ErrorKind::Config, "task needs [pair] with a");
    Rational T = job.pair_t && cfg.task == "jumps" ? *job.pair_t : Rational(1);
    if (cfg.T) T = Rational::parse(*cfg.T);
    JumpOptions jopts{job.eval, job.test_element, job.minimal_primes, job.domain};
    out << "resolution = 1/"
        << (prime_power(ctx.p(), cfg.resolution) - 1) << "\n";
    if (cfg.task == "jumps") {
      JumpReport rep =
          jumps_in_range(job.algebra, R, *job.pair_a, T, cfg.resolution, jopts);
      out << "jumps = {";
      for (std::size_t i = 0; i < rep.jumps.size(); ++i) {
        if (i) out << ", ";
        out << rep.jumps[i].str();
        if (rep.unresolved[i]) out << " (unresolved)";
      }
      out << "}\n";
      for (std::size_t i = 0; i < rep.ideals.size(); ++i) {
        Rational lo = i == 0 ? Rational(0) : rep.jumps[i - 1];
        if (i < rep.jumps.size())
          out << "[" << lo.str() << ", " << rep.jumps[i].str() << ") -> "
              << rep.ideals[i].str() << "\n";
        else
          out << "[" << lo.str() << ", " << rep.T.str() << "] -> "
              << rep.ideals[i].str() << "\n";
      }
      return {out.str(), 0};
    }
    FptResult res = fpt(job.algebra, *job.pair_a, T, cfg.resolution, jopts);
    if (res.found)
      out << "fpt = " << res.value.str() << " (resolution-limited; true value in ("
          << (res.value - res.resolution).str() << ", " << res.value.str()
          << "])\n";
    else
      out << "fpt > " << T.str() << "\n";
    return {out.str(), 0};
  }

  if (cfg.task == "skoda") {
    if (!job.pair_a || !job.pair_t)
      fail(ErrorKind::Config, "skoda needs [pair] with a and t");
    SkodaReport rep = skoda_check(job.algebra, *job.pair_a, *job.pair_t,
                                  job.test_element, job.minimal_primes,
                                  job.domain, job.eval);
    out << "lhs (a * tau(a^{t-1})) = " << rep.lhs.str() << "\n";
    out << "rhs (tau(a^t)) = " << rep.rhs.str() << "\n";
    out << "containment: " << (rep.containment ? "yes" : "NO") << "\n";
    out << "equality: " << (rep.equality ? "yes" : "no")
        << (rep.equality_expected ? " (expected: t >= mu(a))" : "") << "\n";
    return {out.str(), 0};
  }

  if (cfg.task == "oracle-nu") {
    if (!cfg.oracle_f) fail(ErrorKind::Config, "oracle-nu needs task.f");
    Poly f = ctx.parse(*cfg.oracle_f);
    out << "nu(" << cfg.oracle_f.value() << ", p^" << cfg.oracle_e
        << ") = " << nu_value(f, cfg.oracle_e) << "\n";
    return {out.str(), 0};
  }

  if (cfg.task == "oracle-monomial-tau") {
    if (!job.pair_a || !job.pair_t)
      fail(ErrorKind::Config, "oracle-monomial-tau needs [pair] with a and t");
    if (!is_monomial_ideal(*job.pair_a))
      fail(ErrorKind::NotMonomial, "oracle requires a monomial ideal");
    std::vector<Monomial> gens;
    for (const auto& g : job.pair_a->gb()) gens.push_back(g.lead().first);
    std::vector<Monomial> result = monomial_tau(ctx.p(), gens, *job.pair_t);
    std::vector<Poly> polys;
    for (const auto& m : result) polys.push_back(Poly::monomial(ctx.p(), m));
    out << "monomial-tau = " << Ideal(ctx, polys).str() << "\n";
    return {out.str(), 0};
  }

  if (cfg.task == "oracle-closed-ideals") {
    std::vector<std::pair<std::uint32_t, Poly>> ops;
    for (const auto& g : job.algebra.generators()) ops.push_back({g.e(), g.f()});
    std::vector<Poly> stable =
        bruteforce_closed_ideals(ops, ctx.p(), cfg.gauge_cap);
    out << "stable-ideals = {";
    for (std::size_t i = 0; i < stable.size(); ++i) {
      if (i) out << ", ";
      out << "(" << stable[i].str(ctx.vars()) << ")";
    }
    out << "}\n";
    return {out.str(), 0};
  }

  fail(ErrorKind::Config, "unknown task: " + cfg.task);
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::Config:
    case ErrorKind::NotMonomial:
    case ErrorKind::MissingMinimalPrimes:
    case ErrorKind::NotSupported:
      return 2;
    case ErrorKind::Overflow:
    case ErrorKind::WordLimit:
    case ErrorKind::IterLimit:
    case ErrorKind::Internal:
      return 3;
    case ErrorKind::NoTestElement:
    case ErrorKind::DescentFailure:
    case ErrorKind::NotFpure:
      return 4;
  }
  return 3;
}

RunResult run_job(const JobConfig& cfg) {
  try {
    return dispatch(cfg);
  } catch (const Error& e) {
    return {std::string("error: ") + e.what() + "\n", exit_code_for(e.kind())};
  }
}

}  // namespace cartier
