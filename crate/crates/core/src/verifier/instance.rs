//! Seeded instance families and corpora.

use std::collections::BTreeSet;
use std::fmt;
use std::path::PathBuf;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{minimalize_monomials, Ideal};
use crate::poly::{binomial, monomials_of_degree, Monomial, MonomialOrder, Polynomial, PrimeField, Ring, DEFAULT_PRIME};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    RandomHomogeneous,
    RandomMonomial,
    Borel,
    EdgeIdeal,
    CompleteIntersection,
    FromFile,
}

impl Family {
    pub const GENERATED: [Family; 5] = [
        Family::RandomHomogeneous,
        Family::RandomMonomial,
        Family::Borel,
        Family::EdgeIdeal,
        Family::CompleteIntersection,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::RandomHomogeneous => "random-homogeneous",
            Family::RandomMonomial => "random-monomial",
            Family::Borel => "borel",
            Family::EdgeIdeal => "edge-ideal",
            Family::CompleteIntersection => "complete-intersection",
            Family::FromFile => "from-file",
        }
    }

    pub fn parse(s: &str) -> Result<Family> {
        Family::GENERATED
            .into_iter()
            .chain([Family::FromFile])
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown family {s:?}")))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceSpec {
    pub family: Family,
    pub nvars: usize,
    pub mu: usize,
    pub max_degree: u32,
    pub seed: u64,
    pub prime: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub path: Option<PathBuf>,
}

impl InstanceSpec {
    pub fn new(family: Family, nvars: usize, mu: usize, max_degree: u32, seed: u64) -> Self {
        InstanceSpec { family, nvars, mu, max_degree, seed, prime: DEFAULT_PRIME as u64, path: None }
    }
}

/// An ideal under test with the metadata the checks may need.
#[derive(Clone, Debug)]
pub struct Instance {
    pub id: String,
    pub family: Family,
    pub ideal: Ideal,
    /// Length of the generator list as given, before deduplication.
    pub raw_generators: usize,
    pub height: Option<u32>,
    pub unmixed_radical: bool,
}

impl Instance {
    pub fn new(id: impl Into<String>, family: Family, ideal: Ideal) -> Self {
        let raw_generators = ideal.num_gens();
        Instance { id: id.into(), family, ideal, raw_generators, height: None, unmixed_radical: false }
    }
}

pub fn generate_instance(spec: &InstanceSpec) -> Result<Ideal> {
    if spec.family == Family::FromFile {
        let path = spec.path.as_ref().ok_or_else(|| Error::InvalidArgument("from-file needs a path".into()))?;
        return Ok(crate::io::read_ideal_file(path)?.ideal);
    }
    let field = PrimeField::new(spec.prime)?;
    let ring = Ring::new(spec.nvars, field)?;
    if spec.nvars == 0 || spec.mu == 0 || spec.max_degree == 0 {
        return Err(Error::InvalidArgument("N, mu and D must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    match spec.family {
        Family::RandomHomogeneous => {
            let lo = if spec.max_degree >= 2 { 2 } else { 1 };
            let forms = (0..spec.mu)
                .map(|_| {
                    let d = rng.gen_range(lo..=spec.max_degree);
                    random_form(ring, d, &mut rng)
                })
                .collect();
            Ideal::new(ring, forms)
        }
        Family::CompleteIntersection => {
            let c = spec.mu.min(spec.nvars);
            let degrees = vec![spec.max_degree; c];
            complete_intersection(ring, &degrees, &mut rng)
        }
        Family::RandomMonomial => {
            let available: u64 = (1..=spec.max_degree).map(|d| binomial((spec.nvars + d as usize - 1) as u64, d as u64)).sum();
            if spec.mu as u64 > available {
                return Err(Error::InvalidArgument(format!("only {available} monomials available")));
            }
            let mut chosen = BTreeSet::new();
            while chosen.len() < spec.mu {
                let d = rng.gen_range(1..=spec.max_degree);
                chosen.insert(random_monomial(spec.nvars, d, &mut rng));
            }
            Ideal::from_monomials(ring, &chosen.into_iter().collect::<Vec<_>>())
        }
        Family::Borel => {
            for _ in 0..10_000 {
                let k = rng.gen_range(1..=2);
                let seeds: Vec<Monomial> = (0..k)
                    .map(|_| {
                        let d = rng.gen_range(1..=spec.max_degree);
                        biased_monomial(spec.nvars, d, &mut rng)
                    })
                    .collect();
                let gens = strongly_stable_closure(&seeds);
                if gens.len() <= spec.mu {
                    return Ideal::from_monomials(ring, &gens);
                }
            }
            Err(Error::InvalidArgument("no Borel ideal with that few generators found".into()))
        }
        Family::EdgeIdeal => {
            let pairs: Vec<(usize, usize)> =
                (0..spec.nvars).flat_map(|i| (i + 1..spec.nvars).map(move |j| (i, j))).collect();
            if spec.mu > pairs.len() {
                return Err(Error::InvalidArgument(format!("a graph on {} vertices has {} edges", spec.nvars, pairs.len())));
            }
            let mut edges: Vec<(usize, usize)> = pairs.choose_multiple(&mut rng, spec.mu).copied().collect();
            edges.sort_unstable();
            edge_ideal(ring, &edges)
        }
        Family::FromFile => unreachable!(),
    }
}

/// Dense form of degree `d` with uniform coefficients.
pub fn random_form<R: Rng>(ring: Ring, d: u32, rng: &mut R) -> Polynomial {
    let p = ring.characteristic();
    loop {
        let terms: Vec<(Monomial, u32)> =
            monomials_of_degree(ring.nvars(), d).into_iter().map(|m| (m, rng.gen_range(0..p))).collect();
        let f = Polynomial::from_terms(ring, MonomialOrder::Grevlex, terms);
        if !f.is_zero() {
            return f;
        }
    }
}

/// Dense random forms of the given degrees.
pub fn complete_intersection<R: Rng>(ring: Ring, degrees: &[u32], rng: &mut R) -> Result<Ideal> {
    if degrees.len() > ring.nvars() {
        return Err(Error::InvalidArgument("more forms than variables".into()));
    }
    Ideal::new(ring, degrees.iter().map(|&d| random_form(ring, d, rng)).collect())
}

/// `(x_i x_j : {i, j} an edge)`.
pub fn edge_ideal(ring: Ring, edges: &[(usize, usize)]) -> Result<Ideal> {
    let n = ring.nvars();
    let ms: Vec<Monomial> = edges
        .iter()
        .map(|&(i, j)| {
            if i == j || i >= n || j >= n {
                Err(Error::InvalidArgument(format!("bad edge ({i}, {j})")))
            } else {
                Ok(Monomial::var(n, i).mul(&Monomial::var(n, j)))
            }
        })
        .collect::<Result<_>>()?;
    Ideal::from_monomials(ring, &ms)
}

fn random_monomial<R: Rng>(n: usize, d: u32, rng: &mut R) -> Monomial {
    let mut m = Monomial::one(n);
    for _ in 0..d {
        let i = rng.gen_range(0..n);
        m.set_exp(i, m.exp(i) + 1);
    }
    m
}

/// Random monomial favouring the first variables, so that its Borel
/// closure stays small.
fn biased_monomial<R: Rng>(n: usize, d: u32, rng: &mut R) -> Monomial {
    let mut m = Monomial::one(n);
    for _ in 0..d {
        let mut i = 0;
        while i + 1 < n && rng.gen_bool(0.5) {
            i += 1;
        }
        m.set_exp(i, m.exp(i) + 1);
    }
    m
}

/// Minimal generators of the smallest strongly stable ideal containing
/// `seeds`: closed under `u -> x_i u / x_j` for `i < j`.
pub fn strongly_stable_closure(seeds: &[Monomial]) -> Vec<Monomial> {
    let mut seen: BTreeSet<Monomial> = seeds.iter().copied().collect();
    let mut stack: Vec<Monomial> = seeds.to_vec();
    while let Some(u) = stack.pop() {
        for j in u.support().collect::<Vec<_>>() {
            for i in 0..j {
                let mut w = u;
                w.set_exp(j, w.exp(j) - 1);
                w.set_exp(i, w.exp(i) + 1);
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
    }
    minimalize_monomials(&seen.into_iter().collect::<Vec<_>>())
}

/// Corpus parameters, drawn per family within desk-scale limits.
pub fn corpus_specs(seed: u64, size: usize) -> Vec<(String, InstanceSpec)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..size)
        .map(|k| {
            let family = Family::GENERATED[k % Family::GENERATED.len()];
            let spec = draw_spec(family, &mut rng);
            (format!("{}-{:04}", family.name(), k), spec)
        })
        .collect()
}

fn draw_spec<R: Rng>(family: Family, rng: &mut R) -> InstanceSpec {
    let seed = rng.gen();
    match family {
        Family::RandomHomogeneous => {
            let n = rng.gen_range(2..=6);
            let d = if n >= 5 { rng.gen_range(1..=3) } else { rng.gen_range(1..=4) };
            let mu = rng.gen_range(1..=6usize);
            InstanceSpec::new(family, n, mu, d, seed)
        }
        Family::RandomMonomial | Family::Borel => {
            let n = rng.gen_range(2..=6usize);
            let d = rng.gen_range(1..=4u32);
            let available: u64 = (1..=d).map(|k| binomial((n + k as usize - 1) as u64, k as u64)).sum();
            let mu = rng.gen_range(1..=6usize).min(available as usize);
            InstanceSpec::new(family, n, mu, d, seed)
        }
        Family::EdgeIdeal => {
            let n = rng.gen_range(3..=6usize);
            let max_edges = (n * (n - 1) / 2).min(6);
            InstanceSpec::new(family, n, rng.gen_range(1..=max_edges), 2, seed)
        }
        Family::CompleteIntersection => {
            let n = rng.gen_range(2..=6usize);
            let c = rng.gen_range(1..=n.min(4));
            let d = if c >= 3 { rng.gen_range(1..=3) } else { rng.gen_range(1..=4) };
            InstanceSpec::new(family, n, c, d, seed)
        }
        Family::FromFile => unreachable!(),
    }
}

/// Generates every instance of [`corpus_specs`].
pub fn corpus(seed: u64, size: usize) -> Result<Vec<Instance>> {
    corpus_specs(seed, size)
        .into_iter()
        .map(|(id, spec)| Ok(Instance::new(id, spec.family, generate_instance(&spec)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_cycle() {
        let r = Ring::new(5, PrimeField::default()).unwrap();
        let i = edge_ideal(r, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let mut got = i.monomials().unwrap();
        got.sort();
        let mut want: Vec<Monomial> = [[1, 1, 0, 0, 0], [0, 1, 1, 0, 0], [0, 0, 1, 1, 0], [0, 0, 0, 1, 1], [1, 0, 0, 0, 1]]
            .iter()
            .map(|e| Monomial::from_exponents(e))
            .collect();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn complete_intersection_of_quadrics() {
        let spec = InstanceSpec::new(Family::CompleteIntersection, 3, 3, 2, 17);
        let i = generate_instance(&spec).unwrap();
        assert_eq!(i.num_gens(), 3);
        assert!(i.gens().iter().all(|g| g.degree() == Some(2)));
    }

    #[test]
    fn generation_is_deterministic() {
        for family in Family::GENERATED {
            let spec = InstanceSpec::new(family, 4, 3, 3, 5);
            let spec = if family == Family::EdgeIdeal { InstanceSpec { max_degree: 2, ..spec } } else { spec };
            assert_eq!(generate_instance(&spec).unwrap(), generate_instance(&spec).unwrap());
        }
    }

    #[test]
    fn inconsistent_specs_are_rejected() {
        assert!(generate_instance(&InstanceSpec::new(Family::RandomMonomial, 2, 6, 1, 0)).is_err());
        assert!(generate_instance(&InstanceSpec::new(Family::EdgeIdeal, 3, 4, 2, 0)).is_err());
    }

    #[test]
    fn borel_family_is_strongly_stable() {
        for s in 0..20 {
            let i = generate_instance(&InstanceSpec::new(Family::Borel, 4, 4, 3, s)).unwrap();
            assert!(i.num_gens() <= 4);
            assert!(crate::invariants::borel_fixed_test(&i).unwrap());
        }
    }

    #[test]
    fn closure_of_a_single_square() {
        let c = strongly_stable_closure(&[Monomial::from_exponents(&[0, 2])]);
        assert_eq!(c.len(), 3);
    }
}
