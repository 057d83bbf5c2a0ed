#include <stdio.h>
#include <string.h>
#include <assert.h>
#include "morsetiles.h"

int main(void) {
    assert(strlen(mt_version()) > 0);

    MtTiling *oct = NULL, *fan = NULL, *prod = NULL;
    assert(mt_octahedron_tiling(&oct) == MT_STATUS_OK);
    assert(mt_boundary_triangle_fan(&fan) == MT_STATUS_OK);

    size_t count = 0;
    assert(mt_tiling_tile_count(oct, &count) == MT_STATUS_OK);
    printf("octahedron tiles: %zu\n", count);
    int64_t euler = 0;
    assert(mt_tiling_euler(oct, &euler) == MT_STATUS_OK && euler == 2);

    assert(mt_tiling_product(fan, oct, &prod) == MT_STATUS_OK);
    assert(mt_tiling_verify(prod, false) == MT_STATUS_OK);

    char *report = NULL;
    assert(mt_tiling_report_json(prod, false, &report) == MT_STATUS_OK);
    printf("product report: %.120s...\n", report);
    mt_string_free(report);

    MtTiling *bad = NULL;
    assert(mt_tiling_from_json("{", &bad) == MT_STATUS_BAD_INPUT);
    printf("error message: %s\n", mt_last_error_message());

    char *json = NULL;
    assert(mt_tiling_to_json(oct, &json) == MT_STATUS_OK);
    MtTiling *back = NULL;
    assert(mt_tiling_from_json(json, &back) == MT_STATUS_OK);
    mt_string_free(json);

    mt_tiling_free(oct);
    mt_tiling_free(fan);
    mt_tiling_free(prod);
    mt_tiling_free(back);
    puts("C ABI smoke test passed");
    return 0;
}
