//! Multi-threaded drivers for the enumeration and classification.
//!
//! Results are sorted canonically before they are returned, so the output
//! does not depend on the number of workers.

use borel_core::ideals::{is_abelian, Enumerator};
use borel_core::kernel::{cartan_kernel, ClassifiedIdeal};
use borel_core::{IdealClassification, MonomialIdeal, Result, RootSystem};
use rayon::prelude::*;
use rayon::ThreadPool;

/// Default cap on the number of enumerated ideals.
pub const DEFAULT_MAX_IDEALS: usize = 1_000_000;

#[derive(Debug)]
pub struct Workers {
    pool: ThreadPool,
}

impl Workers {
    /// `jobs = None` uses one worker per available core.
    pub fn new(jobs: Option<usize>) -> Self {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(n) = jobs {
            builder = builder.num_threads(n);
        }
        Self {
            pool: builder.build().expect("failed to start worker threads"),
        }
    }

    pub fn threads(&self) -> usize {
        self.pool.current_num_threads()
    }

    /// Nonzero monomial ideals in canonical order.
    pub fn enumerate(&self, rs: &RootSystem, limit: usize) -> Result<Vec<MonomialIdeal>> {
        self.pool.install(|| {
            Enumerator::new(rs).with_limit(limit).run_with(|layer| {
                let mut next: Vec<MonomialIdeal> = layer
                    .par_iter()
                    .flat_map_iter(|j| j.extensions(rs))
                    .collect();
                next.par_sort_unstable();
                next.dedup();
                next
            })
        })
    }

    pub fn classify(&self, ideals: &[MonomialIdeal], rs: &RootSystem) -> IdealClassification {
        let mut all = Vec::with_capacity(ideals.len() + 1);
        all.push(MonomialIdeal::zero(rs));
        all.extend(ideals.iter().filter(|j| !j.is_zero()).cloned());
        all.sort_unstable();
        all.dedup();
        let entries = self.pool.install(|| {
            all.into_par_iter()
                .map(|ideal| ClassifiedIdeal {
                    kernel: cartan_kernel(&ideal, rs),
                    abelian: is_abelian(&ideal, rs),
                    ideal,
                })
                .collect()
        });
        IdealClassification { entries }
    }
}
