//! Named, runtime-selectable implementations of the interchangeable
//! algorithms: L(1, ψ) routes, periodic zeta evaluators and identity suites.

mod methods;
mod suites;

pub use methods::{
    l1_methods, periodic_zeta_evaluators, DirectLogSine, DirectSeries, HurwitzRearrangement, L1Method,
    PeriodicZetaEvaluator, PropMp, TheoremRoute,
};
pub use suites::{check_suites, CheckSuite, SuiteOutcome};

pub trait Strategy: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
}

/// Strategies of one kind, in registration order.
pub struct Registry<T: ?Sized + Strategy> {
    entries: Vec<Box<T>>,
}

impl<T: ?Sized + Strategy> Default for Registry<T> {
    fn default() -> Self {
        Registry { entries: Vec::new() }
    }
}

impl<T: ?Sized + Strategy> Registry<T> {
    /// Adds `entry`, replacing any strategy already registered under its name.
    pub fn register(&mut self, entry: Box<T>) -> &mut Self {
        match self.entries.iter().position(|e| e.name() == entry.name()) {
            Some(i) => self.entries[i] = entry,
            None => self.entries.push(entry),
        }
        self
    }

    pub fn get(&self, name: &str) -> Option<&T> {
        self.entries.iter().find(|e| e.name() == name).map(|e| e.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.entries.iter().map(|e| e.as_ref())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
