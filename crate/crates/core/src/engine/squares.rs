//! squares64: five rounds of squaring keyed by a 64-bit key, one word per counter value.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Squares64 {
    pub counter: u64,
    pub key: u64,
}

impl Squares64 {
    /// The output for a given counter; a pure function of `(counter, key)`.
    #[inline(always)]
    pub fn at(counter: u64, key: u64) -> u64 {
        let y = counter.wrapping_mul(key);
        let z = y.wrapping_add(key);
        let mut x = y;
        x = x.wrapping_mul(x).wrapping_add(y).rotate_left(32);
        x = x.wrapping_mul(x).wrapping_add(z).rotate_left(32);
        x = x.wrapping_mul(x).wrapping_add(y).rotate_left(32);
        let t = x.wrapping_mul(x).wrapping_add(z);
        x = t.rotate_left(32);
        t ^ (x.wrapping_mul(x).wrapping_add(y) >> 32)
    }

    #[inline(always)]
    pub fn next_u64(&mut self) -> u64 {
        let r = Self::at(self.counter, self.key);
        self.counter = self.counter.wrapping_add(1);
        r
    }
}
