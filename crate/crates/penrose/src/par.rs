//! Slab-parallel drivers. Every result is merged and sorted, so outputs do
//! not depend on the thread count.

use penrose_core::generator::{scan_slab, AuditReport, Membership, Method, Patch, ScanOutcome};
use penrose_core::similarity::{
    center_slabs, find_centers_in_slab, verify_on_patch, InflationCenter, ScalingFactor,
    VerificationReport,
};
use penrose_core::{Error, GoldenNumber, InternalPoint};
use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuildError, ThreadPoolBuilder};

/// Points handed to one verification task.
const VERIFY_CHUNK: usize = 64;

pub struct Runner {
    pool: ThreadPool,
}

impl Runner {
    /// `threads = None` uses rayon's default.
    pub fn new(threads: Option<usize>) -> Result<Self, ThreadPoolBuildError> {
        let mut b = ThreadPoolBuilder::new();
        if let Some(n) = threads {
            b = b.num_threads(n);
        }
        Ok(Runner { pool: b.build()? })
    }

    pub fn threads(&self) -> usize {
        self.pool.current_num_threads()
    }

    fn scan(&self, membership: &Membership, radius_squared: &GoldenNumber) -> ScanOutcome {
        let cbox = membership.candidate_box(radius_squared);
        let slabs: Vec<i64> = cbox.slabs().collect();
        let parts: Vec<ScanOutcome> = self.pool.install(|| {
            slabs
                .par_iter()
                .map(|&x1| scan_slab(membership, &cbox, x1))
                .collect()
        });
        parts
            .into_iter()
            .fold(ScanOutcome::default(), ScanOutcome::merge)
    }

    /// Points only; call [`Patch::with_tiles`] for edges and faces.
    pub fn generate(
        &self,
        method: Method,
        v: &InternalPoint,
        radius_squared: &GoldenNumber,
    ) -> Result<Patch, Error> {
        let outcome = self.scan(&Membership::new(method, v), radius_squared);
        Patch::assemble(v.clone(), radius_squared.clone(), outcome)
    }

    pub fn audit(&self, v: &InternalPoint, radius_squared: &GoldenNumber) -> AuditReport {
        self.scan(&Membership::new(Method::ModelSet, v), radius_squared)
            .into()
    }

    pub fn find_centers(
        &self,
        f: &ScalingFactor,
        v: &InternalPoint,
        search_radius_squared: &GoldenNumber,
    ) -> Result<Vec<InflationCenter>, Error> {
        f.admissible_or_err()?;
        let slabs: Vec<i64> = center_slabs(v, search_radius_squared).collect();
        let parts: Vec<Vec<InflationCenter>> = self.pool.install(|| {
            slabs
                .par_iter()
                .map(|&x1| find_centers_in_slab(f, v, search_radius_squared, x1))
                .collect::<Result<_, _>>()
        })?;
        let mut out: Vec<InflationCenter> = parts.into_iter().flatten().collect();
        out.sort_by_key(|a| a.y);
        Ok(out)
    }

    /// Checks the images of every point of an existing patch.
    pub fn verify_patch(
        &self,
        f: &ScalingFactor,
        center: &InflationCenter,
        patch: &Patch,
    ) -> Result<VerificationReport, Error> {
        // Fail fast on the preconditions, even for an empty patch.
        let empty = Patch::from_points(
            patch.offset().clone(),
            patch.radius_squared().clone(),
            Vec::new(),
        );
        let mut report = verify_on_patch(f, center, &empty)?;
        let parts: Vec<VerificationReport> = self.pool.install(|| {
            patch
                .points()
                .par_chunks(VERIFY_CHUNK)
                .map(|chunk| {
                    let sub = Patch::from_points(
                        patch.offset().clone(),
                        patch.radius_squared().clone(),
                        chunk.to_vec(),
                    );
                    verify_on_patch(f, center, &sub)
                })
                .collect::<Result<_, _>>()
        })?;
        for p in parts {
            report.points_tested += p.points_tested;
            report.failures.extend(p.failures);
        }
        report.failures.sort_unstable();
        Ok(report)
    }

    pub fn verify(
        &self,
        f: &ScalingFactor,
        center: &InflationCenter,
        v: &InternalPoint,
        inner_radius_squared: &GoldenNumber,
    ) -> Result<VerificationReport, Error> {
        f.admissible_or_err()?;
        let patch = self.generate(Method::ModelSet, v, inner_radius_squared)?;
        self.verify_patch(f, center, &patch)
    }
}
