//! Worked QZN examples replayed against their stated outcomes.

use serde::Serialize;

use crate::error::Result;
use crate::fuzzy::{t_conorm, t_norm, Membership, ZNumber};
use crate::qzn::{rotation_angle, Qmf, Qzn};

const CHECK_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub example: &'static str,
    pub description: String,
    pub computed: String,
    pub expected: String,
    pub passed: bool,
}

impl Check {
    fn verdict(
        example: &'static str,
        description: impl Into<String>,
        computed: bool,
        expected: bool,
    ) -> Self {
        Check {
            example,
            description: description.into(),
            computed: computed.to_string(),
            expected: expected.to_string(),
            passed: computed == expected,
        }
    }

    fn number(
        example: &'static str,
        description: impl Into<String>,
        computed: f64,
        expected: f64,
    ) -> Self {
        Check {
            example,
            description: description.into(),
            computed: format!("{computed:.6}"),
            expected: format!("{expected:.6}"),
            passed: (computed - expected).abs() <= CHECK_TOLERANCE,
        }
    }
}

/// A named example: the QZNs involved, rendered, and its checks.
#[derive(Debug, Clone, Serialize)]
pub struct ExampleBlock {
    pub name: &'static str,
    pub inputs: Vec<String>,
    pub checks: Vec<Check>,
}

impl ExampleBlock {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn polar_qzn(a: (f64, f64, f64), b: (f64, f64, f64)) -> Result<Qzn> {
    Qzn::new(
        Qmf::from_polar(a.0, a.1, a.2)?,
        Qmf::from_polar(b.0, b.1, b.2)?,
    )
}

fn example_inclusion() -> Result<ExampleBlock> {
    let z1 = polar_qzn((0.3, 0.7, 1.5), (0.6, 0.9, 0.3))?;
    let z2 = polar_qzn((0.4, 0.6, 0.2), (0.7, 0.5, 0.4))?;
    let (a1, b1) = z1.prob_zero();
    let (a2, b2) = z2.prob_zero();
    let ex = "inclusion";
    Ok(ExampleBlock {
        name: ex,
        inputs: vec![z1.to_string(), z2.to_string()],
        checks: vec![
            Check::number(ex, "p(|0>) of A1", a1, 0.3),
            Check::number(ex, "p(|0>) of A2", a2, 0.4),
            Check::number(ex, "p(|0>) of B1", b1, 0.6),
            Check::number(ex, "p(|0>) of B2", b2, 0.7),
            Check::verdict(ex, "Z1 ⊆ Z2", z1.includes(&z2)?, true),
            Check::verdict(ex, "Z2 ⊆ Z1", z2.includes(&z1)?, false),
        ],
    })
}

fn example_equality() -> Result<ExampleBlock> {
    let z1 = polar_qzn((0.3, 0.7, 1.5), (0.6, 0.9, 0.3))?;
    let z2 = polar_qzn((0.3, 0.6, 0.2), (0.6, 0.5, 0.4))?;
    let ex = "equality";
    Ok(ExampleBlock {
        name: ex,
        inputs: vec![z1.to_string(), z2.to_string()],
        checks: vec![
            Check::verdict(ex, "Z1 ⊆ Z2", z1.includes(&z2)?, true),
            Check::verdict(ex, "Z2 ⊆ Z1", z2.includes(&z1)?, true),
            Check::verdict(ex, "Z1 = Z2", z1.equals(&z2)?, true),
        ],
    })
}

fn example_complement() -> Result<ExampleBlock> {
    let z = Qzn::from_z(ZNumber::new(0.3, 0.6)?)?;
    let c = z.complement()?;
    let (a, b) = c.prob_zero();
    let ex = "complement";
    Ok(ExampleBlock {
        name: ex,
        inputs: vec![z.to_string()],
        checks: vec![
            Check::number(ex, "complement p(|0>) of A", a, 0.7),
            Check::number(ex, "complement p(|0>) of B", b, 0.4),
        ],
    })
}

fn pair() -> Result<(ZNumber, ZNumber)> {
    Ok((ZNumber::new(0.35, 0.77)?, ZNumber::new(0.41, 0.83)?))
}

fn example_intersection() -> Result<ExampleBlock> {
    let (x, y) = pair()?;
    let (zx, zy) = (Qzn::from_z(x)?, Qzn::from_z(y)?);
    let (a, b) = zx.intersect(&zy)?.prob_zero();
    let ex = "intersection";
    Ok(ExampleBlock {
        name: ex,
        inputs: vec![x.to_string(), y.to_string()],
        checks: vec![
            Check::number(
                ex,
                "intersection p(|0>) of A = x1·y1",
                a,
                t_norm(x.a, y.a).value(),
            ),
            Check::number(
                ex,
                "intersection p(|0>) of B = x2·y2",
                b,
                t_norm(x.b, y.b).value(),
            ),
        ],
    })
}

fn example_union() -> Result<ExampleBlock> {
    let (x, y) = pair()?;
    let (zx, zy) = (Qzn::from_z(x)?, Qzn::from_z(y)?);
    let (a, b) = zx.union(&zy)?.prob_zero();
    let ex = "union";
    Ok(ExampleBlock {
        name: ex,
        inputs: vec![x.to_string(), y.to_string()],
        checks: vec![
            Check::number(
                ex,
                "union p(|0>) of A = x1+y1-x1·y1",
                a,
                t_conorm(x.a, y.a).value(),
            ),
            Check::number(
                ex,
                "union p(|0>) of B = x2+y2-x2·y2",
                b,
                t_conorm(x.b, y.b).value(),
            ),
        ],
    })
}

fn example_conversion() -> Result<ExampleBlock> {
    let z = ZNumber::new(0.5, 0.75)?;
    let theta_a = rotation_angle(z.a);
    let theta_b = rotation_angle(z.b);
    let q = Qzn::from_z(z)?;
    let (a, b) = q.prob_zero();
    let ex = "conversion";
    Ok(ExampleBlock {
        name: ex,
        inputs: vec![z.to_string()],
        checks: vec![
            Check::number(ex, "θA in degrees", theta_a.to_degrees(), 90.0),
            Check::number(ex, "θB in degrees", theta_b.to_degrees(), 60.0),
            Check::number(ex, "QMF p(|0>) of A", a, 0.5),
            Check::number(ex, "QMF p(|0>) of B", b, 0.75),
        ],
    })
}

fn example_combination() -> Result<ExampleBlock> {
    let z = ZNumber::new(0.5, 0.75)?;
    let c = Qzn::from_z(z)?.combine()?;
    let xy = Membership::new(0.375)?.value();
    let ex = "combination";
    Ok(ExampleBlock {
        name: ex,
        inputs: vec![z.to_string()],
        checks: vec![
            Check::number(ex, "combined p(|0>) = xy", c.prob_zero(), xy),
            Check::number(ex, "combined p(|1>) = 1-xy", c.prob_one(), 1.0 - xy),
        ],
    })
}

/// Runs every example block in order.
pub fn replay() -> Result<Vec<ExampleBlock>> {
    Ok(vec![
        example_inclusion()?,
        example_equality()?,
        example_complement()?,
        example_intersection()?,
        example_union()?,
        example_conversion()?,
        example_combination()?,
    ])
}
