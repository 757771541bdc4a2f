//! Exercises the C ABI from the Rust side: handle lifecycle, the buffer
//! size-query protocol, status codes, and the generated header.

use std::ffi::CStr;
use std::ptr;

use minprop_ffi::*;

fn family(f: MinpropFamily, a: u32, b: u32) -> *mut MinpropGraph {
    let mut g = ptr::null_mut();
    let status = unsafe { minprop_graph_family(f, a, b, &mut g) };
    assert_eq!(status, MinpropStatus::Ok);
    assert!(!g.is_null());
    g
}

#[test]
fn version_is_a_c_string() {
    let v = unsafe { CStr::from_ptr(minprop_version()) };
    assert!(!v.to_str().unwrap().is_empty());
}

#[test]
fn graph_lifecycle_and_queries() {
    let edges: [u32; 6] = [0, 1, 1, 2, 2, 3];
    let mut g = ptr::null_mut();
    let status = unsafe { minprop_graph_new(4, edges.as_ptr(), 3, &mut g) };
    assert_eq!(status, MinpropStatus::Ok);

    let mut order = 0u32;
    assert_eq!(
        unsafe { minprop_graph_order(g, &mut order) },
        MinpropStatus::Ok
    );
    assert_eq!(order, 4);

    let mut count = 0u64;
    assert_eq!(
        unsafe { minprop_graph_edge_count(g, &mut count) },
        MinpropStatus::Ok
    );
    assert_eq!(count, 3);

    let mut present = false;
    assert_eq!(
        unsafe { minprop_graph_has_edge(g, 1, 2, &mut present) },
        MinpropStatus::Ok
    );
    assert!(present);
    assert_eq!(
        unsafe { minprop_graph_has_edge(g, 0, 3, &mut present) },
        MinpropStatus::Ok
    );
    assert!(!present);
    assert_eq!(
        unsafe { minprop_graph_has_edge(g, 0, 9, &mut present) },
        MinpropStatus::InvalidArgument
    );

    unsafe { minprop_graph_free(g) };
    unsafe { minprop_graph_free(ptr::null_mut()) }; // null is ignored
}

#[test]
fn construction_errors_map_to_statuses() {
    let mut g = ptr::null_mut();
    let self_loop: [u32; 2] = [1, 1];
    assert_eq!(
        unsafe { minprop_graph_new(3, self_loop.as_ptr(), 1, &mut g) },
        MinpropStatus::InvalidArgument
    );
    let out_of_range: [u32; 2] = [0, 7];
    assert_eq!(
        unsafe { minprop_graph_new(3, out_of_range.as_ptr(), 1, &mut g) },
        MinpropStatus::InvalidArgument
    );
    assert_eq!(
        unsafe { minprop_graph_new(3, ptr::null(), 2, &mut g) },
        MinpropStatus::NullArgument
    );
    assert_eq!(
        unsafe { minprop_graph_new(3, ptr::null(), 0, ptr::null_mut()) },
        MinpropStatus::NullArgument
    );
    assert_eq!(
        unsafe { minprop_graph_family(MinpropFamily::Cycle, 2, 0, &mut g) },
        MinpropStatus::InvalidArgument
    );
}

#[test]
fn closure_buffer_protocol() {
    let g = family(MinpropFamily::Path, 5, 0);
    let seed: [u32; 1] = [0];

    // size query with a zero-capacity buffer
    let mut needed = 0usize;
    let status = unsafe { minprop_closure(g, seed.as_ptr(), 1, ptr::null_mut(), 0, &mut needed) };
    assert_eq!(status, MinpropStatus::BufferTooSmall);
    assert_eq!(needed, 5);

    let mut buf = vec![0u32; needed];
    let mut len = 0usize;
    let status =
        unsafe { minprop_closure(g, seed.as_ptr(), 1, buf.as_mut_ptr(), buf.len(), &mut len) };
    assert_eq!(status, MinpropStatus::Ok);
    assert_eq!(&buf[..len], &[0, 1, 2, 3, 4]);

    // a blocked seed closes to itself
    let middle: [u32; 1] = [2];
    let status =
        unsafe { minprop_closure(g, middle.as_ptr(), 1, buf.as_mut_ptr(), buf.len(), &mut len) };
    assert_eq!(status, MinpropStatus::Ok);
    assert_eq!(&buf[..len], &[2]);

    let bad_seed: [u32; 1] = [9];
    let status = unsafe {
        minprop_closure(
            g,
            bad_seed.as_ptr(),
            1,
            buf.as_mut_ptr(),
            buf.len(),
            &mut len,
        )
    };
    assert_eq!(status, MinpropStatus::InvalidArgument);

    unsafe { minprop_graph_free(g) };
}

#[test]
fn propagates_and_rounds() {
    let g = family(MinpropFamily::Cycle, 4, 0);
    let mut ok = false;
    let adjacent: [u32; 2] = [0, 1];
    assert_eq!(
        unsafe { minprop_propagates(g, adjacent.as_ptr(), 2, &mut ok) },
        MinpropStatus::Ok
    );
    assert!(ok);
    let opposite: [u32; 2] = [0, 2];
    assert_eq!(
        unsafe { minprop_propagates(g, opposite.as_ptr(), 2, &mut ok) },
        MinpropStatus::Ok
    );
    assert!(!ok);

    // both far vertices are forced in the same round
    let mut rounds = 0i64;
    assert_eq!(
        unsafe { minprop_synchronized_rounds(g, adjacent.as_ptr(), 2, &mut rounds) },
        MinpropStatus::Ok
    );
    assert_eq!(rounds, 1);
    assert_eq!(
        unsafe { minprop_synchronized_rounds(g, opposite.as_ptr(), 2, &mut rounds) },
        MinpropStatus::Ok
    );
    assert_eq!(rounds, -1);
    unsafe { minprop_graph_free(g) };
}

#[test]
fn solve_modes_and_witnesses() {
    let k4 = family(MinpropFamily::Complete, 4, 0);
    let mut size = 0u32;
    let mut witness = [0u32; 8];
    let mut wlen = 0usize;
    let mut tested = 0u64;
    let status = unsafe {
        minprop_solve(
            k4,
            MinpropSolveMode::Unrestricted,
            0,
            &mut size,
            witness.as_mut_ptr(),
            witness.len(),
            &mut wlen,
            &mut tested,
        )
    };
    assert_eq!(status, MinpropStatus::Ok);
    assert_eq!(size, 3);
    assert_eq!(&witness[..wlen], &[0, 1, 2]);
    assert!(tested >= 1);
    unsafe { minprop_graph_free(k4) };

    // leaf-restricted on the 4-level balanced binary tree
    let t24 = family(MinpropFamily::Tree, 2, 4);
    let status = unsafe {
        minprop_solve(
            t24,
            MinpropSolveMode::LeavesOnly,
            0,
            &mut size,
            witness.as_mut_ptr(),
            witness.len(),
            &mut wlen,
            ptr::null_mut(),
        )
    };
    assert_eq!(status, MinpropStatus::Ok);
    assert_eq!(size, 5);
    assert_eq!(&witness[..wlen], &[7, 8, 9, 11, 13]);
    unsafe { minprop_graph_free(t24) };

    // top-down and bottom-up need a tree
    let t23 = family(MinpropFamily::Tree, 2, 3);
    for (mode, expect) in [
        (MinpropSolveMode::TopDown, 4u32),
        (MinpropSolveMode::BottomUp, 4),
    ] {
        let status = unsafe {
            minprop_solve(
                t23,
                mode,
                0,
                &mut size,
                ptr::null_mut(),
                0,
                ptr::null_mut(),
                ptr::null_mut(),
            )
        };
        assert_eq!(status, MinpropStatus::Ok);
        assert_eq!(size, expect);
    }
    unsafe { minprop_graph_free(t23) };

    let c4 = family(MinpropFamily::Cycle, 4, 0);
    let status = unsafe {
        minprop_solve(
            c4,
            MinpropSolveMode::TopDown,
            0,
            &mut size,
            ptr::null_mut(),
            0,
            ptr::null_mut(),
            ptr::null_mut(),
        )
    };
    assert_eq!(status, MinpropStatus::NotATree);
    // a cycle has no leaves to seed from
    let status = unsafe {
        minprop_solve(
            c4,
            MinpropSolveMode::LeavesOnly,
            0,
            &mut size,
            ptr::null_mut(),
            0,
            ptr::null_mut(),
            ptr::null_mut(),
        )
    };
    assert_eq!(status, MinpropStatus::NoSolution);
    unsafe { minprop_graph_free(c4) };

    // capacity and disconnection statuses
    let p40 = family(MinpropFamily::Path, 40, 0);
    let status = unsafe {
        minprop_solve(
            p40,
            MinpropSolveMode::Unrestricted,
            0,
            &mut size,
            ptr::null_mut(),
            0,
            ptr::null_mut(),
            ptr::null_mut(),
        )
    };
    assert_eq!(status, MinpropStatus::CapacityExceeded);
    unsafe { minprop_graph_free(p40) };

    let mut disconnected = ptr::null_mut();
    assert_eq!(
        unsafe { minprop_graph_new(2, ptr::null(), 0, &mut disconnected) },
        MinpropStatus::Ok
    );
    let status = unsafe {
        minprop_solve(
            disconnected,
            MinpropSolveMode::Unrestricted,
            0,
            &mut size,
            ptr::null_mut(),
            0,
            ptr::null_mut(),
            ptr::null_mut(),
        )
    };
    assert_eq!(status, MinpropStatus::Disconnected);
    unsafe { minprop_graph_free(disconnected) };
}

#[test]
fn witness_buffer_too_small_reports_needed_length() {
    let star = family(MinpropFamily::Star, 6, 0);
    let mut size = 0u32;
    let mut tiny = [0u32; 1];
    let mut wlen = 0usize;
    let status = unsafe {
        minprop_solve(
            star,
            MinpropSolveMode::Unrestricted,
            0,
            &mut size,
            tiny.as_mut_ptr(),
            tiny.len(),
            &mut wlen,
            ptr::null_mut(),
        )
    };
    assert_eq!(status, MinpropStatus::BufferTooSmall);
    assert_eq!(size, 4);
    assert_eq!(wlen, 4);
    unsafe { minprop_graph_free(star) };
}

#[test]
fn counting_functions() {
    let mut v = 0u64;
    assert_eq!(
        unsafe { minprop_tree_pi_formula(2, 5, &mut v) },
        MinpropStatus::Ok
    );
    assert_eq!(v, 11);
    assert_eq!(
        unsafe { minprop_tree_pi_formula(1, 5, &mut v) },
        MinpropStatus::InvalidArgument
    );

    assert_eq!(
        unsafe { minprop_tree_order(2, 4, &mut v) },
        MinpropStatus::Ok
    );
    assert_eq!(v, 15);

    assert_eq!(unsafe { minprop_jacobsthal(6, &mut v) }, MinpropStatus::Ok);
    assert_eq!(v, 21);
    assert_eq!(
        unsafe { minprop_jacobsthal(66, &mut v) },
        MinpropStatus::CapacityExceeded
    );

    let mut member = false;
    assert_eq!(
        unsafe { minprop_is_jacobsthal(11, &mut member) },
        MinpropStatus::Ok
    );
    assert!(member);
    assert_eq!(
        unsafe { minprop_is_jacobsthal(4, &mut member) },
        MinpropStatus::Ok
    );
    assert!(!member);

    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { minprop_asm_count_string(7, &mut s) },
        MinpropStatus::Ok
    );
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    assert_eq!(text, "218348");
    unsafe { minprop_string_free(s) };
    unsafe { minprop_string_free(ptr::null_mut()) };

    assert_eq!(
        unsafe { minprop_asm_count_string(0, &mut s) },
        MinpropStatus::CapacityExceeded
    );
}

#[test]
fn generated_header_is_valid_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/minprop.h");
    let text = std::fs::read_to_string(header).expect("header generated at build time");
    for symbol in [
        "MinpropGraph",
        "minprop_graph_new",
        "minprop_solve",
        "minprop_closure",
        "MINPROP_STATUS_BUFFER_TOO_SMALL",
        "MINPROP_FAMILY_TREE",
    ] {
        assert!(text.contains(symbol), "header lacks {symbol}");
    }
    // the header must stand alone as C
    let status = std::process::Command::new("cc")
        .args(["-std=c99", "-fsyntax-only", "-Wall", "-Werror", header])
        .status();
    match status {
        Ok(s) => assert!(s.success(), "cc rejected the generated header"),
        Err(_) => eprintln!("cc unavailable; skipping header syntax check"),
    }
}

const C_CONSUMER: &str = r#"
#include <stdio.h>
#include "minprop.h"

int main(void) {
    MinpropGraph *g = NULL;
    if (minprop_graph_family(MINPROP_FAMILY_TREE, 2, 4, &g) != MINPROP_STATUS_OK) return 1;
    uint32_t size = 0;
    uint32_t witness[16];
    uintptr_t len = 0;
    MinpropStatus s = minprop_solve(g, MINPROP_SOLVE_MODE_LEAVES_ONLY, 0,
                                    &size, witness, 16, &len, NULL);
    if (s != MINPROP_STATUS_OK) return 2;
    printf("size=%u witness=", size);
    for (uintptr_t i = 0; i < len; i++) printf(i ? " %u" : "%u", witness[i]);
    printf("\n");
    uint64_t formula = 0;
    if (minprop_tree_pi_formula(2, 4, &formula) != MINPROP_STATUS_OK) return 3;
    printf("formula=%llu\n", (unsigned long long)formula);
    minprop_graph_free(g);
    return 0;
}
"#;

#[test]
fn c_program_links_and_runs() {
    let manifest = env!("CARGO_MANIFEST_DIR");
    let staticlib = format!("{manifest}/../../target/debug/libminprop_ffi.a");
    if !std::path::Path::new(&staticlib).exists() {
        eprintln!("staticlib not at {staticlib}; skipping link test");
        return;
    }
    let dir = std::env::temp_dir().join(format!("minprop-capi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("consumer.c");
    let bin = dir.join("consumer");
    std::fs::write(&src, C_CONSUMER).unwrap();
    let compile = std::process::Command::new("cc")
        .arg("-std=c99")
        .arg(format!("-I{manifest}/include"))
        .arg(&src)
        .arg(&staticlib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .output();
    let compile = match compile {
        Ok(out) => out,
        Err(_) => {
            eprintln!("cc unavailable; skipping link test");
            return;
        }
    };
    assert!(
        compile.status.success(),
        "compile failed: {}",
        String::from_utf8_lossy(&compile.stderr)
    );
    let run = std::process::Command::new(&bin).output().unwrap();
    assert!(run.status.success());
    assert_eq!(
        String::from_utf8_lossy(&run.stdout),
        "size=5 witness=7 8 9 11 13\nformula=5\n"
    );
    let _ = std::fs::remove_dir_all(&dir);
}
