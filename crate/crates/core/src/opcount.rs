//! Thread-local counter of rational arithmetic operations.

use std::cell::Cell;

thread_local! {
    static OPS: Cell<u64> = const { Cell::new(0) };
}

#[inline]
pub(crate) fn tick() {
    OPS.with(|c| c.set(c.get().wrapping_add(1)));
}

/// Operations performed so far on the current thread.
pub fn current() -> u64 {
    OPS.with(|c| c.get())
}

/// Runs `f` and returns its result together with the number of rational
/// operations it performed on this thread.
pub fn measure<T>(f: impl FnOnce() -> T) -> (T, u64) {
    let start = current();
    let out = f();
    (out, current().wrapping_sub(start))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    #[test]
    fn counts_arithmetic() {
        let a = Rational::new(1, 2);
        let b = Rational::new(1, 3);
        let (_, ops) = measure(|| {
            let c = &a + &b;
            let d = &c * &a;
            &d - &b
        });
        assert_eq!(ops, 3);
    }
}
