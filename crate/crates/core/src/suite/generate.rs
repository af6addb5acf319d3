//! Random instances for the law suite.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::approach::alexandroff;
use crate::completion::Net;
use crate::extarith::{inf_owned, ExtVal};
use crate::ordtop::FinitePreorder;
use crate::space::FiniteSpace;
use crate::weights::{coweight_coreflection, representable, weight_coreflection};

use super::SuiteConfig;

pub fn point_names(n: usize) -> Vec<String> {
    (0..n).map(|i| char::from(b'a' + i as u8).to_string()).collect()
}

/// Relaxes `d(x,z)` to `min(d(x,z), d(x,y) + d(y,z))` until the triangle
/// inequality holds.
pub fn min_plus_closure(n: usize, dist: &mut [ExtVal]) {
    for y in 0..n {
        for x in 0..n {
            let xy = dist[x * n + y].clone();
            if xy.is_infinite() {
                continue;
            }
            for z in 0..n {
                let through = xy.add(&dist[y * n + z]);
                if through < dist[x * n + z] {
                    dist[x * n + z] = through;
                }
            }
        }
    }
}

/// A space on `n` points: off-diagonal entries drawn from the pool, the
/// diagonal set to `0`, then closed under min-plus relaxation.
pub fn generate_space_of_size<R: Rng>(rng: &mut R, n: usize, pool: &[ExtVal]) -> FiniteSpace {
    let mut dist: Vec<ExtVal> = (0..n * n)
        .map(|i| {
            if i / n == i % n {
                ExtVal::zero()
            } else {
                pool.choose(rng).expect("pool is nonempty").clone()
            }
        })
        .collect();
    min_plus_closure(n, &mut dist);
    FiniteSpace::validate_flat(point_names(n), dist).expect("min-plus closure yields a metric")
}

pub fn generate_space<R: Rng>(rng: &mut R, config: &SuiteConfig) -> FiniteSpace {
    let n = rng.gen_range(1..=config.max_points);
    generate_space_of_size(rng, n, &config.value_pool)
}

/// Draws the instances a law needs.
pub struct Gen<'a, R: Rng> {
    pub rng: &'a mut R,
    pub config: &'a SuiteConfig,
}

impl<R: Rng> Gen<'_, R> {
    pub fn value(&mut self) -> ExtVal {
        self.config.value_pool.choose(self.rng).expect("pool is nonempty").clone()
    }

    pub fn size(&mut self, cap: usize) -> usize {
        self.rng.gen_range(1..=self.config.max_points.min(cap))
    }

    pub fn space(&mut self, cap: usize) -> FiniteSpace {
        let n = self.size(cap);
        generate_space_of_size(self.rng, n, &self.config.value_pool)
    }

    pub fn vector(&mut self, n: usize) -> Vec<ExtVal> {
        (0..n).map(|_| self.value()).collect()
    }

    /// A weight: a representable, a shifted representable, or the largest
    /// weight below a random vector.
    pub fn weight(&mut self, s: &FiniteSpace) -> Vec<ExtVal> {
        match self.rng.gen_range(0..4) {
            0 => representable(s, self.rng.gen_range(0..s.len())).into_values(),
            1 => {
                let alpha = self.value();
                representable(s, self.rng.gen_range(0..s.len())).plus(&alpha).into_values()
            }
            _ => {
                let g = self.vector(s.len());
                weight_coreflection(s, &g).into_values()
            }
        }
    }

    pub fn coweight(&mut self, s: &FiniteSpace) -> Vec<ExtVal> {
        if self.rng.gen_bool(0.3) {
            let x = self.rng.gen_range(0..s.len());
            return (0..s.len()).map(|y| s.d(x, y).clone()).collect();
        }
        let g = self.vector(s.len());
        coweight_coreflection(s, &g).into_values()
    }

    /// A weight shifted down to infimum `0`.
    pub fn zero_inf_weight(&mut self, s: &FiniteSpace) -> Vec<ExtVal> {
        let w = self.weight(s);
        let m = inf_owned(w.iter().cloned());
        if m.is_infinite() {
            return vec![ExtVal::zero(); s.len()];
        }
        w.iter().map(|v| v.monus(&m)).collect()
    }

    pub fn map(&mut self, n: usize, m: usize) -> Vec<usize> {
        (0..n).map(|_| self.rng.gen_range(0..m)).collect()
    }

    pub fn net(&mut self, s: &FiniteSpace, max_cycle: usize) -> Net {
        let n = s.len();
        let pre_len = self.rng.gen_range(0..=2);
        let pre = (0..pre_len).map(|_| self.rng.gen_range(0..n)).collect();
        let cycle_len = self.rng.gen_range(1..=max_cycle.max(1));
        let cycle = if self.rng.gen_bool(0.5) {
            // biased toward forward Cauchy: stay inside one zero-clique
            let cliques = s.zero_cliques();
            let clique = cliques.choose(self.rng).expect("carrier is nonempty").clone();
            (0..cycle_len).map(|_| *clique.choose(self.rng).expect("clique is nonempty")).collect()
        } else {
            (0..cycle_len).map(|_| self.rng.gen_range(0..n)).collect()
        };
        Net::new(s, pre, cycle).expect("indices are in range")
    }

    /// The reflexive-transitive closure of a random relation.
    pub fn preorder(&mut self, cap: usize) -> FinitePreorder {
        let n = self.size(cap);
        let density = self.rng.gen_range(0.0..0.6);
        let mut leq: Vec<bool> = (0..n * n).map(|i| i / n == i % n || self.rng.gen_bool(density)).collect();
        for y in 0..n {
            for x in 0..n {
                if leq[x * n + y] {
                    for z in 0..n {
                        if leq[y * n + z] {
                            leq[x * n + z] = true;
                        }
                    }
                }
            }
        }
        FinitePreorder::validate(point_names(n), leq).expect("closure is a preorder")
    }

    /// A full table of the Alexandroff structure with one entry replaced.
    pub fn perturbed_table(&mut self, s: &FiniteSpace) -> crate::approach::DeltaTable {
        let mut table = alexandroff(s).table();
        let n = s.len();
        let x = self.rng.gen_range(0..n);
        let a = crate::subset::Subset(self.rng.gen_range(0..1u64 << n));
        let v = self.value();
        table.set(x, a, v);
        table
    }
}
