use tori::gfmat::*;
use tori::verify::*;
use tori::weylclass::*;

fn main() {
    let d = TorusClassDescriptor::new(
        ClassicalFamily::C, 2, 2,
        SignedCycleType::new(vec![], vec![1,1]).unwrap(), None).unwrap();
    let gens = in_group_torus_generators(&d).unwrap();
    for g in &gens { println!("gen:\n{:?}", g); }
    let spec = sp_group(2, 2).unwrap();
    let group = enumerate_group(&spec, 10_000).unwrap();
    println!("group order {}", group.order());
    for g in &gens { println!("in group: {}", group.contains(g)); }
    let f = field(2).unwrap();
    let elems = close_matrices(&f, 4, &gens, 1000).unwrap();
    println!("torus order {}", elems.len());
    // check all elements in group
    println!("all in group: {}", elems.iter().all(|m| group.contains(m)));
    let n = subgroup_normalizer_order_set(&group, &elems).unwrap();
    println!("normalizer {}", n);
    // centralizer
    let c = subgroup_centralizer_order(&group, &gens);
    println!("centralizer {}", c);
}
