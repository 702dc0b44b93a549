/// Small fast counting generator, 64-bit version.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sfc64 {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub counter: u64,
}

impl Sfc64 {
    #[inline(always)]
    pub fn next_u64(&mut self) -> u64 {
        let tmp = self.a.wrapping_add(self.b).wrapping_add(self.counter);
        self.counter = self.counter.wrapping_add(1);
        self.a = self.b ^ (self.b >> 11);
        self.b = self.c.wrapping_add(self.c << 3);
        self.c = self.c.rotate_left(24).wrapping_add(tmp);
        tmp
    }

    pub fn fill(&mut self, out: &mut [u64]) {
        let mut g = self.clone();
        for w in out {
            *w = g.next_u64();
        }
        *self = g;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counter_increments_by_one() {
        let mut g = Sfc64 { a: 1, b: 2, c: 3, counter: 41 };
        g.next_u64();
        assert_eq!(g.counter, 42);
    }
}
