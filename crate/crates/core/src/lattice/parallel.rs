use rayon::prelude::*;

use super::BiprojectionLattice;
use crate::frobobj::{exchange_check, join, landau_check, FrobeniusObject, PivotalData};
use crate::report::{Check, Report};

/// Worker count: `FROBLAT_THREADS` if set to a positive integer, else the
/// available parallelism.
pub fn thread_count() -> usize {
    std::env::var("FROBLAT_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, usize::from))
}

/// Runs `job` inside a pool capped at [`thread_count`] threads.
pub fn with_pool<T: Send>(job: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new().num_threads(thread_count()).build() {
        Ok(pool) => pool.install(job),
        Err(_) => job(),
    }
}

/// Exchange, Landau and join identities for every unordered pair of elements.
pub fn pair_identities(f: &FrobeniusObject, l: &BiprojectionLattice) -> Report {
    let n = l.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
    let connected = f.is_connected().unwrap_or(false);
    let alpha = PivotalData::identity();
    let one_pair = |&(a, b): &(usize, usize)| {
        let (ea, eb) = (&l.elements[a], &l.elements[b]);
        let mut r = exchange_check(f, ea, eb);
        if connected {
            match landau_check(f, ea, eb, &alpha) {
                Ok(lr) => r.extend(lr.checks),
                Err(e) => r.push(Check::fail("Landau", None).with_note(e.to_string())),
            }
        }
        match join(f, ea, eb, &l.elements) {
            Ok(j) => {
                r.push(Check::from_bool("join agrees with the table", j.join == l.join_table[a][b]));
                r.push(Check::from_bool("meet agrees with the table", l.index_of(&j.meet) == Some(l.meet_table[a][b])));
                r.extend(j.checks);
            }
            Err(e) => r.push(Check::fail("join", None).with_note(e.to_string())),
        }
        for c in &mut r.checks {
            c.name.insert_str(0, &format!("[{a},{b}] "));
        }
        r
    };
    let reports: Vec<Report> = with_pool(|| pairs.par_iter().map(one_pair).collect());
    let mut out = Report::new();
    for r in reports {
        out.extend(r);
    }
    if !connected {
        out.push(Check::pass("Landau").with_note("skipped: the object is not connected"));
    }
    out
}
