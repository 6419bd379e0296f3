use std::ffi::CStr;
use std::ptr;

use rrcode_ffi::*;

fn last_error() -> String {
    let p = rr_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn loco_codeword_and_stream() {
    unsafe {
        let mut code = ptr::null_mut();
        assert_eq!(rr_loco_new(7, &mut code), RrStatus::Ok);
        assert_eq!(rr_loco_message_length(code), 5);
        assert_eq!(rr_loco_block_length(code), 9);
        let mut n = 0u64;
        assert_eq!(rr_loco_cardinality(code, &mut n), RrStatus::Ok);
        assert_eq!(n, 40);

        let mut word = [0u8; 7];
        let mut len = 0;
        assert_eq!(
            rr_loco_encode_codeword(code, 0, word.as_mut_ptr(), 7, &mut len),
            RrStatus::Ok
        );
        assert_eq!((len, word), (7, [0, 0, 1, 1, 0, 0, 1]));
        let mut index = 99;
        assert_eq!(
            rr_loco_decode_codeword(code, word.as_ptr(), 7, &mut index),
            RrStatus::Ok
        );
        assert_eq!(index, 0);

        let data: Vec<u8> = (0..23).map(|i| (i * 7 % 3 == 0) as u8).collect();
        let need = rr_loco_page_bits_for(code, data.len());
        let mut page = vec![0u8; need];
        assert_eq!(
            rr_loco_encode_stream(
                code,
                data.as_ptr(),
                data.len(),
                page.as_mut_ptr(),
                page.len(),
                &mut len
            ),
            RrStatus::Ok
        );
        assert_eq!(len, need);
        let mut back = vec![0u8; need];
        assert_eq!(
            rr_loco_decode_stream(
                code,
                page.as_ptr(),
                len,
                back.as_mut_ptr(),
                back.len(),
                &mut len
            ),
            RrStatus::Ok
        );
        assert_eq!(&back[..data.len()], &data[..]);
        rr_loco_free(code);
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let mut code = ptr::null_mut();
        assert_eq!(rr_loco_new(1, &mut code), RrStatus::InvalidArgument);
        assert!(code.is_null());
        assert!(!last_error().is_empty());

        assert_eq!(rr_loco_new(7, ptr::null_mut()), RrStatus::NullPointer);
        assert_eq!(rr_loco_message_length(ptr::null()), 0);

        assert_eq!(rr_loco_new(7, &mut code), RrStatus::Ok);
        let forbidden = [0u8, 1, 0, 1, 1, 1, 1];
        let mut index = 0;
        assert_eq!(
            rr_loco_decode_codeword(code, forbidden.as_ptr(), 7, &mut index),
            RrStatus::CodecError
        );
        let not_bits = [2u8; 7];
        assert_eq!(
            rr_loco_decode_codeword(code, not_bits.as_ptr(), 7, &mut index),
            RrStatus::InvalidArgument
        );
        assert_eq!(
            rr_loco_encode_codeword(code, 40, ptr::null_mut(), 0, &mut 0),
            RrStatus::InvalidArgument
        );

        let mut len = 0;
        let mut small = [0u8; 3];
        assert_eq!(
            rr_loco_encode_codeword(code, 1, small.as_mut_ptr(), small.len(), &mut len),
            RrStatus::BufferTooSmall
        );
        assert_eq!(len, 7);
        rr_loco_free(code);
        rr_loco_free(ptr::null_mut());
    }
}

#[test]
fn rll_blocks() {
    unsafe {
        let mut code = ptr::null_mut();
        assert_eq!(rr_rll_new(18, 12, &mut code), RrStatus::Ok);
        let mut word = [0u8; 18];
        let mut len = 0;
        for msg in [0u64, 1, 4095] {
            assert_eq!(
                rr_rll_encode_block(code, msg, word.as_mut_ptr(), 18, &mut len),
                RrStatus::Ok
            );
            assert_eq!(word[0], 1);
            assert!(word.windows(2).all(|w| w[0] | w[1] == 1));
            let mut back = 0;
            assert_eq!(
                rr_rll_decode_block(code, word.as_ptr(), 18, &mut back),
                RrStatus::Ok
            );
            assert_eq!(back, msg);
        }
        assert_eq!(
            rr_rll_encode_block(code, 4096, word.as_mut_ptr(), 18, &mut len),
            RrStatus::InvalidArgument
        );
        let mut bad = ptr::null_mut();
        assert_eq!(rr_rll_new(18, 13, &mut bad), RrStatus::InvalidArgument);
        rr_rll_free(code);
    }
}

#[test]
fn gray_map_bits() {
    unsafe {
        let mut map = ptr::null_mut();
        assert_eq!(rr_gray_new(8, &mut map), RrStatus::Ok);
        assert_eq!(rr_gray_pages(map), 3);
        let expected = [
            [1, 1, 1],
            [1, 1, 0],
            [1, 0, 0],
            [1, 0, 1],
            [0, 0, 1],
            [0, 0, 0],
            [0, 1, 0],
            [0, 1, 1],
        ];
        for (level, bits) in expected.iter().enumerate() {
            let mut out = [9u8; 3];
            let mut len = 0;
            assert_eq!(
                rr_gray_level_to_bits(map, level as u8, out.as_mut_ptr(), 3, &mut len),
                RrStatus::Ok
            );
            assert_eq!(&out, bits);
            let mut back = 0;
            assert_eq!(
                rr_gray_bits_to_level(map, out.as_ptr(), 3, &mut back),
                RrStatus::Ok
            );
            assert_eq!(back as usize, level);
        }
        let mut out = [0u8; 3];
        assert_eq!(
            rr_gray_level_to_bits(map, 8, out.as_mut_ptr(), 3, &mut 0),
            RrStatus::InvalidArgument
        );
        rr_gray_free(map);
    }
}

#[test]
fn pattern_scans() {
    unsafe {
        let mut set = ptr::null_mut();
        assert_eq!(rr_patterns_new(8, &mut set), RrStatus::Ok);
        assert_eq!(rr_patterns_len(set), 78);
        let levels = [6u8, 0, 7, 5, 4, 5];
        let mut hits = [0usize; 8];
        let mut n = 0;
        assert_eq!(
            rr_patterns_scan(
                set,
                levels.as_ptr(),
                levels.len(),
                hits.as_mut_ptr(),
                8,
                &mut n
            ),
            RrStatus::Ok
        );
        assert_eq!(&hits[..n], &[0, 3]);

        // 2x3 grid, second row clean
        let grid = [6u8, 0, 7, 1, 1, 1];
        let (mut h, mut v) = (0, 0);
        assert_eq!(
            rr_patterns_scan_grid(
                set,
                grid.as_ptr(),
                2,
                3,
                RrDirection::Both as u32,
                &mut h,
                &mut v
            ),
            RrStatus::Ok
        );
        assert_eq!((h, v), (1, 0));
        assert_eq!(
            rr_patterns_scan_grid(set, grid.as_ptr(), 2, 3, 7, &mut h, &mut v),
            RrStatus::InvalidArgument
        );
        rr_patterns_free(set);
    }
}

#[test]
fn grid_round_trip() {
    unsafe {
        for (scheme, rows, cols) in [
            (RrScheme::Rr1dWordline, 5, 27),
            (RrScheme::Rr1dBitline, 18, 4),
            (RrScheme::Rr2d, 9, 11),
            (RrScheme::RllInterleaved, 3, 36),
            (RrScheme::Uncoded, 4, 4),
        ] {
            let mut cap = 0;
            assert_eq!(
                rr_grid_capacity(scheme as u32, 8, 7, rows, cols, &mut cap),
                RrStatus::Ok
            );
            let payload: Vec<u8> = (0..cap).map(|i| (i % 5 == 1) as u8).collect();
            let mut levels = vec![0u8; rows * cols];
            let mut len = 0;
            assert_eq!(
                rr_grid_encode(
                    scheme as u32,
                    8,
                    7,
                    rows,
                    cols,
                    payload.as_ptr(),
                    cap,
                    levels.as_mut_ptr(),
                    levels.len(),
                    &mut len
                ),
                RrStatus::Ok
            );
            let mut back = vec![0u8; cap];
            assert_eq!(
                rr_grid_decode(
                    scheme as u32,
                    8,
                    7,
                    rows,
                    cols,
                    levels.as_ptr(),
                    back.as_mut_ptr(),
                    cap,
                    &mut len
                ),
                RrStatus::Ok
            );
            assert_eq!(back, payload, "{scheme:?}");
        }
        let mut cap = 0;
        assert_eq!(
            rr_grid_capacity(RrScheme::Rr1dWordline as u32, 8, 7, 5, 28, &mut cap),
            RrStatus::InvalidArgument
        );
        assert_eq!(
            rr_grid_capacity(99, 8, 7, 5, 27, &mut cap),
            RrStatus::InvalidArgument
        );
    }
}

#[test]
fn analysis_values() {
    unsafe {
        let mut x = 0.0;
        assert_eq!(rr_capacity_1d_lq(8, &mut x), RrStatus::Ok);
        assert!((x - 0.9235).abs() < 5e-4);
        assert_eq!(rr_capacity_1d_rr(8, &mut x), RrStatus::Ok);
        assert!((x - 0.8981).abs() < 5e-4);
        assert_eq!(rr_rate_1d_rr(8, 21, &mut x), RrStatus::Ok);
        assert!((x - 0.8841).abs() < 5e-5);
        assert_eq!(rr_rate_2d_rr(16, &mut x), RrStatus::Ok);
        assert!((x - 0.875).abs() < 1e-12);
        assert_eq!(rr_capacity_2d_rr(8, &mut x), RrStatus::Ok);
        let (mut e1, mut e2) = (0.0, 0.0);
        assert_eq!(rr_error_prop(16, 21, &mut e1, &mut e2), RrStatus::Ok);
        assert!((e1 - 2.625).abs() < 1e-12 && e2 == 1.0);
        let (mut p0, mut p1) = (0.0, 0.0);
        assert_eq!(rr_symbol_probs(&mut p0, &mut p1), RrStatus::Ok);
        assert!((p0 - 0.2764).abs() < 1e-4 && (p0 + p1 - 1.0).abs() < 1e-12);
        let mut probs = [0.0; 8];
        let mut len = 0;
        assert_eq!(
            rr_level_probs(8, probs.as_mut_ptr(), 8, &mut len),
            RrStatus::Ok
        );
        assert_eq!(len, 8);
        assert!((probs.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        assert_eq!(rr_capacity_1d_lq(3, &mut x), RrStatus::InvalidArgument);
        let v = CStr::from_ptr(rr_version()).to_str().unwrap();
        assert_eq!(v, env!("CARGO_PKG_VERSION"));
    }
}
