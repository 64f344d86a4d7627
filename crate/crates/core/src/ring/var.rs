//! Indeterminates.
//!
//! Every indeterminate lives in one process-wide namespace: a name always maps
//! to the same [`Var`], so polynomials built anywhere can be combined. Ids are
//! handed out in first-use order and only drive the internal term order; the
//! public ordering of indeterminates is lexicographic on the name.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};

#[derive(Default)]
struct Interner {
    names: Vec<Arc<str>>,
    ids: HashMap<Arc<str>, u32>,
}

fn interner() -> &'static RwLock<Interner> {
    static INTERNER: OnceLock<RwLock<Interner>> = OnceLock::new();
    INTERNER.get_or_init(Default::default)
}

/// A named indeterminate such as `alpha`, `q`, `s_3` or `t0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(u32);

impl Var {
    /// Interns `name`. Panics on names that are not identifiers; use
    /// [`Var::try_new`] for untrusted input.
    pub fn new(name: &str) -> Var {
        Var::try_new(name).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn try_new(name: &str) -> Result<Var> {
        if !is_identifier(name) {
            return Err(Error::InvalidName(name.to_string()));
        }
        if let Some(&id) = interner().read().unwrap().ids.get(name) {
            return Ok(Var(id));
        }
        let mut guard = interner().write().unwrap();
        if let Some(&id) = guard.ids.get(name) {
            return Ok(Var(id));
        }
        let id = guard.names.len() as u32;
        let name: Arc<str> = Arc::from(name);
        guard.names.push(name.clone());
        guard.ids.insert(name, id);
        Ok(Var(id))
    }

    pub fn name(self) -> Arc<str> {
        interner().read().unwrap().names[self.0 as usize].clone()
    }

    /// Public ordering: lexicographic on the name.
    pub fn cmp_by_name(self, other: Var) -> Ordering {
        if self == other {
            Ordering::Equal
        } else {
            self.name().cmp(&other.name())
        }
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interning_is_stable() {
        let a = Var::new("alpha");
        let b = Var::new("alpha");
        assert_eq!(a, b);
        assert_eq!(&*a.name(), "alpha");
    }

    #[test]
    fn rejects_bad_names() {
        assert!(Var::try_new("1x").is_err());
        assert!(Var::try_new("").is_err());
        assert!(Var::try_new("a-b").is_err());
        assert!(Var::try_new("s_12").is_ok());
    }

    #[test]
    fn name_order_is_lexicographic() {
        let z = Var::new("zz_order_probe");
        let a = Var::new("aa_order_probe");
        assert_eq!(a.cmp_by_name(z), Ordering::Less);
    }
}
