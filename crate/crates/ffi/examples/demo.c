/* Encode a short bit stream with the m=7 LOCO code and decode it again.
 *
 *   cargo build -p rrcode-ffi --release
 *   cc crates/ffi/examples/demo.c -Icrates/ffi/include \
 *      target/release/librrcode_ffi.a -lpthread -ldl -lm -o demo
 */
#include <stdio.h>
#include <string.h>

#include "rrcode.h"

int main(void) {
    RrLocoCode *code = NULL;
    if (rr_loco_new(7, &code) != RR_STATUS_OK) {
        fprintf(stderr, "rr_loco_new: %s\n", rr_last_error());
        return 1;
    }

    uint8_t data[10] = {1, 0, 1, 1, 0, 0, 0, 1, 1, 1};
    uint8_t page[64], back[64];
    size_t page_len = 0, back_len = 0;

    if (rr_loco_encode_stream(code, data, 10, page, sizeof page, &page_len) != RR_STATUS_OK ||
        rr_loco_decode_stream(code, page, page_len, back, sizeof back, &back_len) != RR_STATUS_OK) {
        fprintf(stderr, "codec: %s\n", rr_last_error());
        rr_loco_free(code);
        return 1;
    }

    printf("page:");
    for (size_t i = 0; i < page_len; i++) printf("%u", page[i]);
    printf("\nround trip %s\n", memcmp(data, back, 10) == 0 ? "ok" : "FAILED");

    double c = 0;
    rr_capacity_1d_lq(8, &c);
    printf("C1D_Lq(8) = %.4f\n", c);

    rr_loco_free(code);
    return 0;
}
