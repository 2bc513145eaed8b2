//! One check per bound, each producing [`BoundReport`]s for an instance.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groebner::{groebner_basis_through_with, monomial_in, truncated_initial_generators, GBasis, GbOptions};
use crate::invariants::{
    alpha_of, filter_regular_test, frac_reg, generic_section, random_linear_form, regular_sequence_length,
    InvariantBundle, RETRY_BUDGET,
};
use crate::poly::{binomial, MonomialOrder};
use crate::resolution::{
    betti_table, hilbert_function, hilbert_numerator, koszul_betti_monomial, multiplicity_of_one, BettiTable, Subject,
    DegreeCaps,
};

use super::bound::Expr;
use super::instance::Instance;
use super::report::{BoundReport, Relation, Verdict, Witness};

/// Check groups, in report order.
pub const CHECK_GROUPS: [&str; 14] = [
    "thm_lc",
    "thm_prime",
    "coroll_reg",
    "coroll_pd_reg",
    "thm_syz",
    "coroll_syz_reg",
    "thm_jason",
    "lemma_reduction",
    "remark_deg",
    "semicontinuity_and_taylor",
    "alpha_socle",
    "depth",
    "euler_hilbert",
    "mccullough",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckConfig {
    pub seed: u64,
    pub r_sweep: Vec<usize>,
    /// Reference Gröbner bases for the degree remark without pair criteria.
    pub faithful: bool,
    pub remark_degrees: Vec<u32>,
    pub orders: Vec<MonomialOrder>,
    /// `None` runs every group.
    pub groups: Option<Vec<String>>,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            seed: 0,
            r_sweep: vec![1, 2, 3, 4],
            faithful: false,
            remark_degrees: vec![2, 3],
            orders: vec![MonomialOrder::Grevlex, MonomialOrder::Lex],
            groups: None,
        }
    }
}

impl CheckConfig {
    pub fn runs(&self, group: &str) -> bool {
        self.groups.as_ref().is_none_or(|g| g.iter().any(|x| x == group))
    }
}

/// Data shared by all checks on one instance.
pub struct Context<'a> {
    pub instance: &'a Instance,
    pub config: &'a CheckConfig,
    pub nvars: usize,
    pub gb: GBasis,
    pub table: BettiTable,
    pub initial_table: BettiTable,
    pub bundle: InvariantBundle,
    pub seeds: [u64; 2],
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

impl<'a> Context<'a> {
    pub fn new(instance: &'a Instance, config: &'a CheckConfig) -> Result<Self> {
        let ideal = &instance.ideal;
        if ideal.is_unit() {
            return Err(Error::Degenerate("unit ideal".into()));
        }
        let gb = ideal.groebner(MonomialOrder::Grevlex);
        let field = ideal.ring().field();
        let initial_table = koszul_betti_monomial(&gb.leading_monomials(), field)?;
        let table = crate::resolution::koszul::koszul_betti_with_basis(ideal, &gb, &DegreeCaps::from_table(&initial_table))?;
        let bundle = InvariantBundle::from_table(ideal, &table)?;
        let s0 = config.seed ^ fnv1a(&instance.id);
        let seeds = [s0, s0.rotate_left(32) ^ 0x9e37_79b9_7f4a_7c15];
        Ok(Context { instance, config, nvars: ideal.ring().nvars(), gb, table, initial_table, bundle, seeds })
    }

    fn id(&self) -> &str {
        &self.instance.id
    }

    fn witness(&self) -> Witness {
        let mut w = Witness::with_table(&self.table);
        w.gb_sizes.insert("grevlex".into(), self.gb.len());
        w
    }

    fn mu(&self) -> u64 {
        self.bundle.mu
    }

    fn pd(&self) -> i64 {
        self.bundle.pd as i64
    }

    /// `reg(I) = reg(S/I) + 1`.
    fn reg_ideal(&self) -> i64 {
        self.bundle.reg + 1
    }

    fn min_generator_degree(&self) -> u32 {
        self.table.min_degree(1).unwrap_or(0)
    }

    fn corollary_hypotheses(&self) -> Option<&'static str> {
        if self.mu() < 2 {
            Some("fewer than two minimal generators")
        } else if self.min_generator_degree() < 2 {
            Some("a minimal generator of degree below 2")
        } else {
            None
        }
    }
}

/// All selected checks on one instance. A step that errors is reported as
/// a failure of its group.
pub fn run_checks(instance: &Instance, config: &CheckConfig) -> Vec<BoundReport> {
    let ctx = match Context::new(instance, config) {
        Ok(c) => c,
        Err(e) => return vec![BoundReport::error(&instance.id, "pipeline", &e)],
    };
    let mut out = Vec::new();
    let mut syz_gamma = None;
    for group in CHECK_GROUPS {
        if !config.runs(group) && !(group == "thm_syz" && config.runs("coroll_syz_reg")) {
            continue;
        }
        let res = match group {
            "thm_lc" => check_thm_lc(&ctx),
            "thm_prime" => check_thm_prime(&ctx),
            "coroll_reg" => check_coroll_reg(&ctx),
            "coroll_pd_reg" => check_coroll_pd_reg(&ctx),
            "thm_syz" => check_thm_syz(&ctx).map(|(reports, gamma)| {
                syz_gamma = Some(gamma);
                if config.runs("thm_syz") {
                    reports
                } else {
                    Vec::new()
                }
            }),
            "coroll_syz_reg" => match syz_gamma {
                Some(g) => check_coroll_syz_reg(&ctx, g),
                None => Err(Error::Degenerate("no syzygy degree data".into())),
            },
            "thm_jason" => check_thm_jason(&ctx),
            "lemma_reduction" => check_lemma_reduction(&ctx),
            "remark_deg" => check_remark_deg(&ctx),
            "semicontinuity_and_taylor" => check_semicontinuity_and_taylor(&ctx),
            "alpha_socle" => check_alpha_socle(&ctx),
            "depth" => check_depth(&ctx),
            "euler_hilbert" => check_euler_hilbert(&ctx),
            "mccullough" => check_mccullough(&ctx),
            _ => unreachable!(),
        };
        match res {
            Ok(r) => out.extend(r),
            Err(e) => out.push(BoundReport::error(ctx.id(), group, &e)),
        }
    }
    out
}

fn two_pow(e: Expr) -> Expr {
    Expr::int(2).pow(e)
}

/// `pd(S/I) <= mu^(2^alpha)`, with the minimal, degree-restricted and raw
/// generator counts in place of `mu`.
pub fn check_thm_lc(ctx: &Context) -> Result<Vec<BoundReport>> {
    let alpha = ctx.bundle.alpha;
    let pd = ctx.pd();
    let sharp = ctx.table.beta_upto(1, (alpha + 1) as u32);
    let rhs = |m: u64| Expr::int(m).pow(two_pow(Expr::int(alpha as u64)));
    let mut out = Vec::new();
    for (name, m) in [("thm_lc", ctx.mu()), ("thm_lc_sharp", sharp), ("thm_lc_raw", ctx.instance.raw_generators as u64)] {
        out.push(BoundReport::le(ctx.id(), name, vec![("mu", m as i64), ("alpha", alpha)], pd, rhs(m), ctx.witness())?);
    }
    Ok(out)
}

/// `pd(S/I) <= (h^(2^(alpha+3)-3))^(2^alpha)` for unmixed radical ideals.
pub fn check_thm_prime(ctx: &Context) -> Result<Vec<BoundReport>> {
    let alpha = ctx.bundle.alpha;
    if !ctx.instance.unmixed_radical {
        return Ok(vec![BoundReport::not_met(ctx.id(), "thm_prime", Relation::Le, vec![], "unmixed radical not asserted", ctx.witness())]);
    }
    let h = match ctx.instance.height {
        Some(h) => h as u64,
        None => height_of(ctx) as u64,
    };
    let a = Expr::int(alpha as u64);
    let inner = Expr::int(h).pow(two_pow(Expr::int(alpha as u64 + 3)).minus(3));
    let inputs = || vec![("h", h as i64), ("alpha", alpha)];
    let sharp = ctx.table.beta_upto(1, (alpha + 1) as u32) as i64;
    Ok(vec![
        BoundReport::le(ctx.id(), "thm_prime", inputs(), ctx.pd(), inner.clone().pow(two_pow(a)), ctx.witness())?,
        BoundReport::le(ctx.id(), "thm_prime_ingredient", inputs(), sharp, inner, ctx.witness())?,
    ])
}

/// `N - dim(S/I)`, the order of vanishing of the Hilbert numerator at `1`.
pub fn height_of(ctx: &Context) -> usize {
    let lms = ctx.gb.leading_monomials();
    let top = ctx.table.entries().map(|(_, j, _)| j).max().unwrap_or(0) + ctx.nvars as u32;
    let k = hilbert_numerator(&hilbert_function(&lms, ctx.nvars, top), ctx.nvars);
    multiplicity_of_one(&k)
}

/// `reg(I) <= D^(2^(mu^(2^alpha) - 2))`.
pub fn check_coroll_reg(ctx: &Context) -> Result<Vec<BoundReport>> {
    let d = ctx.bundle.max_degree as u64;
    let inputs = vec![("mu", ctx.mu() as i64), ("D", d as i64), ("alpha", ctx.bundle.alpha)];
    if let Some(why) = ctx.corollary_hypotheses() {
        return Ok(vec![BoundReport::not_met(ctx.id(), "coroll_reg", Relation::Le, inputs, why, ctx.witness())]);
    }
    let n = Expr::int(ctx.mu()).pow(two_pow(Expr::int(ctx.bundle.alpha as u64)));
    let rhs = Expr::int(d).pow(two_pow(n.minus(2)));
    Ok(vec![BoundReport::le(ctx.id(), "coroll_reg", inputs, ctx.reg_ideal(), rhs, ctx.witness())?])
}

/// `pd(S/I) <= mu^(2^reg(S/I))`, and the step `alpha <= reg(S/I)`.
pub fn check_coroll_pd_reg(ctx: &Context) -> Result<Vec<BoundReport>> {
    let reg = ctx.bundle.reg;
    let inputs = || vec![("mu", ctx.mu() as i64), ("reg", reg)];
    let rhs = Expr::int(ctx.mu()).pow(two_pow(Expr::int(reg as u64)));
    Ok(vec![
        BoundReport::le(ctx.id(), "coroll_pd_reg", inputs(), ctx.pd(), rhs, ctx.witness())?,
        BoundReport::le(ctx.id(), "coroll_pd_reg_alpha", inputs(), ctx.bundle.alpha, Expr::int(reg as u64), ctx.witness())?,
    ])
}

/// `C = t_2(S/(I + (l_1..l_{r+1})))` for one seed; `None` when `beta_2 = 0`.
fn section_t2(ctx: &Context, seed: u64) -> Result<(Option<u32>, usize)> {
    let sec = generic_section(&ctx.instance.ideal, ctx.bundle.depth + 1, seed)?;
    Ok((betti_table(&sec.ideal)?.t(2), sec.draws))
}

/// `pd(S/I) <= mu^(2^(gamma-1))` with `gamma = max(C, D)`, at two seeds.
/// Returns the reports and the `gamma` of the first seed.
pub fn check_thm_syz(ctx: &Context) -> Result<(Vec<BoundReport>, u32)> {
    let d = ctx.bundle.max_degree;
    let (c1, draws1) = section_t2(ctx, ctx.seeds[0])?;
    let (c2, draws2) = section_t2(ctx, ctx.seeds[1])?;
    let mut out = Vec::new();
    let mut gamma0 = 0;
    for (k, (c, draws)) in [(c1, draws1), (c2, draws2)].into_iter().enumerate() {
        let gamma = c.unwrap_or(0).max(d);
        if k == 0 {
            gamma0 = gamma;
        }
        let mut w = ctx.witness().detail("C", c).detail("draws", draws).detail("seed_index", k);
        w.seeds = vec![ctx.seeds[k]];
        let rhs = Expr::int(ctx.mu()).pow(two_pow(Expr::int(gamma as u64).minus(1)));
        let inputs = vec![
            ("mu", ctx.mu() as i64),
            ("D", d as i64),
            ("C", c.map_or(-1, |v| v as i64)),
            ("gamma", gamma as i64),
            ("r", ctx.bundle.depth as i64),
        ];
        let name = if k == 0 { "thm_syz" } else { "thm_syz_second_seed" };
        let mut rep = BoundReport::le(ctx.id(), name, inputs, ctx.pd(), rhs, w)?;
        if c.is_none() {
            rep = rep.with_note("beta_2 of the section vanishes; gamma = D");
        }
        out.push(rep);
    }
    let mut w = ctx.witness();
    w.seeds = ctx.seeds.to_vec();
    out.push(BoundReport::eq(
        ctx.id(),
        "thm_syz_seed_agreement",
        vec![],
        c1.map_or(-1, |v| v as i64),
        c2.map_or(-1, |v| v as i64),
        w,
    ));
    Ok((out, gamma0))
}

/// `reg(I) <= D^(2^(mu^(2^(gamma-1)) - 2))`.
pub fn check_coroll_syz_reg(ctx: &Context, gamma: u32) -> Result<Vec<BoundReport>> {
    let d = ctx.bundle.max_degree as u64;
    let inputs = vec![("mu", ctx.mu() as i64), ("D", d as i64), ("gamma", gamma as i64)];
    if let Some(why) = ctx.corollary_hypotheses() {
        return Ok(vec![BoundReport::not_met(ctx.id(), "coroll_syz_reg", Relation::Le, inputs, why, ctx.witness())]);
    }
    let n = Expr::int(ctx.mu()).pow(two_pow(Expr::int(gamma as u64).minus(1)));
    let rhs = Expr::int(d).pow(two_pow(n.minus(2)));
    let mut w = ctx.witness();
    w.seeds = vec![ctx.seeds[0]];
    Ok(vec![BoundReport::le(ctx.id(), "coroll_syz_reg", inputs, ctx.reg_ideal(), rhs, w)?])
}

/// `pd(S/I) <= r mu^(2^delta)` and `reg(I) <= (delta+1)^(2^(r mu^(2^delta) - 2))`
/// with `delta = reg_{1/r}(S/I)`, for each `r` of the sweep.
pub fn check_thm_jason(ctx: &Context) -> Result<Vec<BoundReport>> {
    let mut out = Vec::new();
    for &r in &ctx.config.r_sweep {
        let delta = frac_reg(&ctx.table, r)?;
        let inputs = || vec![("mu", ctx.mu() as i64), ("r", r as i64), ("delta", delta)];
        let n = Expr::int(r as u64).times(Expr::int(ctx.mu()).pow(two_pow(Expr::int(delta as u64))));
        out.push(BoundReport::le(ctx.id(), format!("thm_jason_r{r}"), inputs(), ctx.pd(), n.clone(), ctx.witness())?);
        let name = format!("coroll_jason_r{r}");
        if ctx.mu() < 2 {
            out.push(BoundReport::not_met(ctx.id(), name, Relation::Le, inputs(), "fewer than two minimal generators", ctx.witness()));
        } else {
            let rhs = Expr::int(delta as u64 + 1).pow(two_pow(n.minus(2)));
            out.push(BoundReport::le(ctx.id(), name, inputs(), ctx.reg_ideal(), rhs, ctx.witness())?);
        }
    }
    Ok(out)
}

/// `alpha(S/(I + (l))) = alpha(S/I)` for a verified regular linear form.
pub fn check_lemma_reduction(ctx: &Context) -> Result<Vec<BoundReport>> {
    let inputs = vec![("depth", ctx.bundle.depth as i64)];
    if ctx.bundle.depth == 0 {
        return Ok(vec![BoundReport::not_met(ctx.id(), "lemma_reduction", Relation::Eq, inputs, "depth zero", ctx.witness())]);
    }
    let ideal = &ctx.instance.ideal;
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seeds[0]);
    for draw in 1..=RETRY_BUDGET {
        let l = random_linear_form(ideal.ring(), &mut rng);
        if !filter_regular_test(&l, ideal)?.regular {
            continue;
        }
        let section = ideal.sum_with(&[l])?;
        let after = alpha_of(&betti_table(&section)?)?;
        let mut w = ctx.witness().detail("draws", draw);
        w.seeds = vec![ctx.seeds[0]];
        return Ok(vec![BoundReport::eq(ctx.id(), "lemma_reduction", inputs, after, ctx.bundle.alpha, w)]);
    }
    Err(Error::RetryBudget("no regular linear form drawn".into()))
}

/// The truncated Buchberger run: (a) its leading monomials generate
/// `in(I)` through degree `delta`, (b) it outputs at most
/// `mu^(2^(delta-1))` polynomials, `mu` counting inputs of degree `<= delta`.
pub fn check_remark_deg(ctx: &Context) -> Result<Vec<BoundReport>> {
    let ideal = &ctx.instance.ideal;
    let opts = if ctx.config.faithful { GbOptions::faithful() } else { GbOptions::default() };
    let mut out = Vec::new();
    for &ord in &ctx.config.orders {
        for &delta in &ctx.config.remark_degrees {
            let reference = groebner_basis_through_with(ideal, ord, delta, opts);
            let truth: Vec<_> = reference.leading_monomials().into_iter().filter(|m| m.degree() <= delta).collect();
            let trunc = truncated_initial_generators(ideal, ord, delta)?;
            let lead = trunc.raw_leading_monomials();
            let missing = truth.iter().filter(|m| !monomial_in(&lead, m)).count();
            let mu_delta = ideal.gens().iter().filter(|g| g.degree().is_some_and(|d| d <= delta)).count();
            let count = trunc.elements().iter().filter(|g| g.degree().is_some_and(|d| d <= delta)).count();
            let inputs = || vec![("delta", delta as i64), ("mu", mu_delta as i64)];
            let mut w = ctx.witness()
                .detail("order", ord.name())
                .detail("initial_generators_le_delta", truth.len())
                .detail("truncated_output", count);
            w.gb_sizes.insert(format!("{}_through_d{delta}", ord.name()), reference.len());
            w.gb_sizes.insert(format!("{}_truncated", ord.name()), trunc.len());
            let tag = format!("{}_d{delta}", ord.name());
            out.push(BoundReport::eq(ctx.id(), format!("remark_deg_gen_{tag}"), inputs(), missing as i64, 0, w.clone()));
            let rhs = Expr::int(mu_delta as u64).pow(two_pow(Expr::int(delta as u64 - 1)));
            out.push(BoundReport::le(ctx.id(), format!("remark_deg_count_{tag}"), inputs(), count as i64, rhs.clone(), w.clone())?);
            out.push(BoundReport::le(ctx.id(), format!("remark_deg_initial_{tag}"), inputs(), truth.len() as i64, rhs, w)?);
        }
    }
    Ok(out)
}

fn violations(small: &BettiTable, big: &BettiTable) -> usize {
    small.entries().filter(|&(i, j, b)| b > big.get(i, j)).count()
}

/// `beta_{i,j}(S/I) <= beta_{i,j}(S/in(I))` for each order, and
/// `beta_i(S/J) <= C(r, i)` for `J = in(I)` with `r` generators.
pub fn check_semicontinuity_and_taylor(ctx: &Context) -> Result<Vec<BoundReport>> {
    let field = ctx.instance.ideal.ring().field();
    let mut out = Vec::new();
    for &ord in &ctx.config.orders {
        let (init, size) = if ord == MonomialOrder::Grevlex {
            (ctx.initial_table.clone(), ctx.gb.len())
        } else {
            // beta_{i,j}(S/J) only sees J in degrees <= j.
            let top = ctx.table.entries().map(|(_, j, _)| j).max().unwrap_or(0);
            let gb = groebner_basis_through_with(&ctx.instance.ideal, ord, top, GbOptions::default());
            let lead: Vec<_> = gb.leading_monomials().into_iter().filter(|m| m.degree() <= top).collect();
            let mut init = BettiTable::new(Subject::Quotient);
            for (i, j, b) in koszul_betti_monomial(&lead, field)?.entries().filter(|&(_, j, _)| j <= top) {
                init.set(i, j, b);
            }
            (init, gb.len())
        };
        let mut w = ctx.witness().detail("initial_betti", init.entries().map(|(i, j, b)| [i as u64, j as u64, b]).collect::<Vec<_>>());
        w.gb_sizes.insert(ord.name().into(), size);
        let strict = ctx.table.entries().any(|(i, j, b)| b != init.get(i, j)) || init.entries().any(|(i, j, b)| b != ctx.table.get(i, j));
        out.push(
            BoundReport::eq(ctx.id(), format!("semicontinuity_{}", ord.name()), vec![], violations(&ctx.table, &init) as i64, 0, w)
                .with_note(if strict { "strict" } else { "equal" }),
        );
    }
    let r = ctx.gb.leading_monomials().len() as u64;
    let bad = (0..=ctx.initial_table.pd()).filter(|&i| ctx.initial_table.beta(i) > binomial(r, i as u64)).count();
    out.push(BoundReport::eq(ctx.id(), "taylor_rank", vec![("r", r as i64)], bad as i64, 0, ctx.witness()));
    Ok(out)
}

/// In depth zero, the least socle degree equals `alpha`.
pub fn check_alpha_socle(ctx: &Context) -> Result<Vec<BoundReport>> {
    let b = &ctx.bundle;
    match b.socle_degrees.iter().min() {
        Some(&s) if b.depth == 0 => Ok(vec![BoundReport::eq(ctx.id(), "alpha_socle", vec![], s as i64, b.alpha, ctx.witness())]),
        _ => Ok(vec![BoundReport::not_met(ctx.id(), "alpha_socle", Relation::Eq, vec![], "positive depth", ctx.witness())]),
    }
}

/// `N - pd` against the length of a regular sequence of random linear forms.
pub fn check_depth(ctx: &Context) -> Result<Vec<BoundReport>> {
    let len = regular_sequence_length(&ctx.instance.ideal, ctx.seeds[0])?;
    let mut w = ctx.witness();
    w.seeds = vec![ctx.seeds[0]];
    Ok(vec![BoundReport::eq(ctx.id(), "depth_cross_check", vec![("N", ctx.nvars as i64)], len as i64, ctx.bundle.depth as i64, w)])
}

/// The Euler characteristic of each strand against the Hilbert numerator.
pub fn check_euler_hilbert(ctx: &Context) -> Result<Vec<BoundReport>> {
    let lms = ctx.gb.leading_monomials();
    let top = ctx.table.entries().map(|(_, j, _)| j).max().unwrap_or(0) + ctx.nvars as u32 + 1;
    let k = hilbert_numerator(&hilbert_function(&lms, ctx.nvars, top), ctx.nvars);
    let euler = ctx.table.euler_coefficients();
    let bad = k.iter().enumerate().filter(|&(j, &h)| euler.get(&(j as u32)).copied().unwrap_or(0) != h).count();
    Ok(vec![BoundReport::eq(ctx.id(), "euler_hilbert", vec![], bad as i64, 0, ctx.witness())])
}

/// `reg(S/I) (c-1)! <= (t_1 + .. + t_c)(c-1)! + t_1 .. t_c` with `c = ceil(N/2)`.
pub fn check_mccullough(ctx: &Context) -> Result<Vec<BoundReport>> {
    let c = ctx.nvars.div_ceil(2);
    let ts: Option<Vec<u64>> = (1..=c).map(|i| ctx.table.t(i).map(u64::from)).collect();
    let inputs = vec![("c", c as i64)];
    let Some(ts) = ts else {
        return Ok(vec![BoundReport::not_met(ctx.id(), "mccullough", Relation::Le, inputs, "pd below ceil(N/2)", ctx.witness())]);
    };
    let fact: u64 = (1..c as u64).product();
    let sum: u64 = ts.iter().sum();
    let prod = ts.iter().fold(Expr::int(1), |acc, &t| acc.times(Expr::int(t)));
    let lhs = ctx.bundle.reg * fact as i64;
    let rhs_val = sum * fact + ts.iter().product::<u64>();
    let mut rep = BoundReport::le(ctx.id(), "mccullough", inputs, lhs, Expr::int(rhs_val), ctx.witness())?;
    rep.rhs_expr = Some(format!("{sum}*{fact}+{prod}"));
    Ok(vec![rep])
}

/// Whether every report is a pass or a recorded unmet hypothesis.
pub fn all_pass(reports: &[BoundReport]) -> bool {
    reports.iter().all(|r| r.verdict != Verdict::Fail)
}
