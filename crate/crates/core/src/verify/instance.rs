use std::fmt;
use std::str::FromStr;

use crate::coeff::RingSpec;
use crate::error::{Error, Result};
use crate::gmod::{CoproductMap, GradedBasis, GradedMap, GradedModule, Tensor2Map, Terms, Terms2};
use crate::hopf::HopfPresentation;
use crate::reduced::reduced_coproduct_map;

/// An even power `S^{2a}` of the antipode; `a = 0` is the identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SquarePower(pub u32);

impl SquarePower {
    pub const ID: SquarePower = SquarePower(0);
    pub const S2: SquarePower = SquarePower(1);
    pub const S4: SquarePower = SquarePower(2);

    /// The map itself, from the antipode of `h`.
    pub fn realize(self, h: &HopfPresentation) -> Result<GradedMap> {
        if self.0 == 0 {
            return Ok(GradedMap::identity(h.module()));
        }
        let s = h.antipode()?;
        s.compose(s)?.pow(i64::from(self.0))
    }
}

pub(crate) fn superscript(n: u64) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().bytes().map(|b| DIGITS[(b - b'0') as usize]).collect()
}

impl fmt::Display for SquarePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => write!(f, "id"),
            a => write!(f, "S{}", superscript(2 * u64::from(a))),
        }
    }
}

/// Accepts `id`, `S2`, `S^2`, `S4`, `S^4`, ... (even exponents only).
impl FromStr for SquarePower {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "id" || t == "S0" || t == "S^0" {
            return Ok(SquarePower::ID);
        }
        let exp = t
            .strip_prefix("S^")
            .or_else(|| t.strip_prefix('S'))
            .and_then(|e| e.parse::<u32>().ok())
            .ok_or_else(|| Error::Invalid(format!("expected `id` or an even antipode power like `S2`, got `{s}`")))?;
        if exp % 2 != 0 {
            return Err(Error::Invalid(format!("antipode power must be even, got `{s}`")));
        }
        Ok(SquarePower(exp / 2))
    }
}

/// The data of the general nilpotency theorem: a module graded by
/// `D₁, D₂, ...` (degree 0 is allowed but lies outside every `D_i`), a linear
/// `δ: D → D⊗D`, two endomaps `e`, `f`, and a positive integer `p`.
#[derive(Clone, Debug)]
pub struct PreCoalgebraInstance {
    pub name: String,
    pub delta: CoproductMap,
    pub e: GradedMap,
    pub f: GradedMap,
    pub p: usize,
}

impl PreCoalgebraInstance {
    pub fn new(name: &str, delta: CoproductMap, e: GradedMap, f: GradedMap, p: usize) -> Result<Self> {
        if p == 0 {
            return Err(Error::Invalid("p must be a positive integer".into()));
        }
        delta.module().check(e.module())?;
        delta.module().check(f.module())?;
        Ok(PreCoalgebraInstance { name: name.to_string(), delta, e, f, p })
    }

    pub fn module(&self) -> &GradedModule {
        self.delta.module()
    }

    pub fn ring(&self) -> &RingSpec {
        self.module().ring()
    }

    pub fn basis(&self) -> &GradedBasis {
        self.module().basis()
    }

    /// `g = e − f`.
    pub fn g(&self) -> GradedMap {
        self.e.sub(&self.f).expect("same module")
    }

    /// `h = e⊗e − f⊗f`.
    pub fn h(&self) -> Tensor2Map {
        let ee = Tensor2Map::tensor(&self.e, &self.e).expect("same module");
        let ff = Tensor2Map::tensor(&self.f, &self.f).expect("same module");
        ee.sub(&ff).expect("same module")
    }
}

/// `D_i := H_i`, `δ :=` the reduced coproduct, `e := S^{2a}`, `f := S^{2b}`.
pub fn instance_from_hopf(h: &HopfPresentation, e: SquarePower, f: SquarePower, p: usize) -> Result<PreCoalgebraInstance> {
    if !h.is_connected() {
        return Err(Error::NotConnected(format!("{} has degree-0 rank {}", h.name(), h.basis().rank(0))));
    }
    let name = format!("{} (e = {e}, f = {f}, p = {p})", h.name());
    PreCoalgebraInstance::new(&name, reduced_coproduct_map(h), e.realize(h)?, f.realize(h)?, p)
}

/// A hand-built instance whose `δ` is not coassociative:
/// `D₁ = ⟨x, y⟩`, `D₂ = ⟨z⟩`, `D₃ = ⟨t⟩`, `δ(z) = x⊗y`, `δ(t) = x⊗z`,
/// `e = id`, `f` fixes `x`, `y` and sends `z ↦ z + y`, `t ↦ t + z`; `p = 1`.
/// Here `(e−f)²(t) = y ≠ 0`, so the exponent `u − p + 1 = 3` is needed at `u = 3`.
pub fn noncoassociative_instance(ring: &RingSpec) -> Result<PreCoalgebraInstance> {
    let labels = vec![vec![], vec!["x".into(), "y".into()], vec!["z".into()], vec!["t".into()]];
    let module = GradedModule::new(GradedBasis::new(labels)?, ring.clone());
    let one = ring.one();
    let (x, y, z, t) = (0, 1, 2, 3);
    let delta = CoproductMap::from_fn(&module, |i| match i {
        2 => Terms2::from([((x, y), one.clone())]),
        3 => Terms2::from([((x, z), one.clone())]),
        _ => Terms2::new(),
    });
    let f = GradedMap::from_fn(&module, |i| match i {
        2 => Terms::from([(z, one.clone()), (y, one.clone())]),
        3 => Terms::from([(t, one.clone()), (z, one.clone())]),
        _ => Terms::from([(i, one.clone())]),
    });
    PreCoalgebraInstance::new("non-coassociative", delta, GradedMap::identity(&module), f, 1)
}
