use clap::Subcommand;
use dehnkit::homsym::{dehn_of_sp, hquandle, lambda_check, mod_reduce_check, sp_group_with_cap, sp_order_formula};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::report::{usage, yes_no, CmdResult, Report};
use crate::sources::cap;

#[derive(Subcommand, Debug)]
pub enum Action {
    /// Primitive classes of H_1(S_g; Z_n) up to sign
    Hquandle {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        n: u32,
        /// Print every class
        #[arg(long)]
        list: bool,
    },
    /// Generate Sp(2g, q) and compare with the order formula
    Sp {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        q: u32,
    },
    /// The Dehn quandle of transvections in Sp(2g, q)
    DehnOfSp {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        q: u32,
    },
    /// Check [b] -> T_b is an isomorphism onto the transvection quandle
    LambdaCheck {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        q: u32,
    },
    /// Sampled check that reduction mod n is an onto homomorphism
    ModReduce {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 6)]
        range: i64,
    },
}

pub fn run(action: &Action, seed: u64) -> CmdResult {
    match action {
        Action::Hquandle { g, n, list } => {
            let (q, classes) = hquandle(*g, *n)?;
            let mut text = format!("size {}\nconnected {}\n", q.size(), yes_no(q.is_connected()));
            if *list {
                for (i, c) in classes.iter().enumerate() {
                    text.push_str(&format!("{i}\t{:?}\n", c.vector()));
                }
            }
            let vectors: Vec<&[i64]> = classes.iter().map(|c| c.vector()).collect();
            Ok(Report::new(
                true,
                text,
                json!({ "size": q.size(), "connected": q.is_connected(), "classes": vectors }),
            ))
        }
        Action::Sp { g, q } => {
            let group = sp_group_with_cap(*g, *q, cap(dehnkit::groups::DEFAULT_CAP)?)?;
            let expected = sp_order_formula(*g as u32, *q as u64);
            let ok = group.order() as u128 == expected;
            Ok(Report::new(
                ok,
                format!("|Sp({}, {q})| = {}\nformula {expected}\nmatches {}", 2 * g, group.order(), yes_no(ok)),
                json!({ "order": group.order(), "formula": expected.to_string(), "matches": ok }),
            ))
        }
        Action::DehnOfSp { g, q } => {
            let d = dehn_of_sp(*g, *q)?;
            Ok(Report::new(
                true,
                format!("size {}\ngroup order {}", d.quandle.size(), d.group.order()),
                json!({ "size": d.quandle.size(), "group_order": d.group.order() }),
            ))
        }
        Action::LambdaCheck { g, q } => {
            let r = lambda_check(*g, *q)?;
            Ok(Report::new(
                r.holds(),
                format!(
                    "classes {}\ndehn size {}\nbijective {}\nhomomorphism {}\nholds {}",
                    r.classes,
                    r.dehn_size,
                    yes_no(r.bijective),
                    yes_no(r.homomorphism),
                    r.holds()
                ),
                json!({ "holds": r.holds(), "report": r }),
            ))
        }
        Action::ModReduce { g, n, samples, range } => {
            if *range <= 0 {
                return Err(usage("--range must be positive"));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let r = mod_reduce_check(*g, *n, *samples, *range, &mut rng)?;
            let ok = r.surjective && r.homomorphism;
            Ok(Report::new(
                ok,
                format!(
                    "target size {}\nsurjective {}\nhomomorphism {} on {} pairs",
                    r.target_size,
                    yes_no(r.surjective),
                    yes_no(r.homomorphism),
                    r.pairs_checked
                ),
                json!({ "seed": seed, "holds": ok, "report": r }),
            ))
        }
    }
}
