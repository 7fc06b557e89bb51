use leibniz_core::catalog;
use leibniz_core::cohomology::*;
use leibniz_core::scalar::rat_int;
use num_traits::Zero;

fn main() {
    let a = catalog::r5(4, &[rat_int(1)]).unwrap();
    let d = 5usize;
    let z = cocycle_space(&a.tensor);
    // canonical cocycles carrying a (e_4, e_1) component
    for v in &z.basis {
        let e41_base = ((3 * d) + 0) * d; // (i=3, j=0, k=..)
        if v[e41_base..e41_base + d].iter().any(|c| !c.is_zero()) {
            let terms: Vec<String> = v.iter().enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(idx, c)| {
                    let (i, j, k) = (idx / (d * d), (idx / d) % d, idx % d);
                    format!("({},{})->{}*e{}", i + 1, j + 1, c, k + 1)
                })
                .collect();
            println!("cocycle: {}", terms.join("  "));
        }
    }
}
