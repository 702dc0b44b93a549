//! Portable random number generation: a family of engines behind one
//! buffered word stream, seeding and stream splitting, and samplers for
//! common continuous and discrete distributions.
//!
//! ```
//! use rngpack::{EngineId, Rng};
//!
//! let mut rng = Rng::seeded(EngineId::X256PlusPlus, 42, &[]);
//! let mut x = [0.0f64; 4];
//! rng.norm(&mut x).unwrap();
//! let mut dice = [0i32; 10];
//! rng.int(&mut dice, 1, 6).unwrap();
//! assert!(dice.iter().all(|d| (1..=6).contains(d)));
//! ```

pub mod buffer;
pub mod continuous;
pub mod ddouble;
pub mod detmath;
pub mod discrete;
pub mod engine;
pub mod error;
pub mod gf2;
pub mod jump;
pub mod mvn;
pub mod real;
pub mod rng;
pub mod seeding;
pub mod state_io;
pub mod ziggurat;

pub use continuous::Continuous;
pub use engine::{engines, EngineId, EngineInfo};
pub use error::{Error, Result};
pub use mvn::MvnLayout;
pub use real::Real;
pub use rng::{Rng, SamplerMode};
pub use seeding::EntropySource;
