#include <stdio.h>
#include <string.h>

#include "monodisk.h"

#define CHECK(cond)                                                   \
    do {                                                              \
        if (!(cond)) {                                                \
            const char *why = md_last_error();                        \
            fprintf(stderr, "%s:%d: %s (%s)\n", __FILE__, __LINE__,   \
                    #cond, why ? why : "no error");                   \
            return 1;                                                 \
        }                                                             \
    } while (0)

int main(void) {
    MdBuildParams params = {
        .family = MD_FAMILY_C, .n = 3, .k = 2, .t = 0.2,
        .word = "SSLSSSSSSSS", .chirality = MD_CHIRALITY_B, .pivot = MD_PIVOT_ABOUT_P,
    };
    MdTiling *tiling = NULL;
    CHECK(md_tiling_build(&params, &tiling) == MD_STATUS_OK);
    CHECK(md_tiling_tile_count(tiling) == 12);

    MdReport report;
    CHECK(md_tiling_validate(tiling, 2000, 42, &report) == MD_STATUS_OK);
    CHECK(report.valid && report.monohedral && report.failure_count == 0);
    CHECK(report.center_touch_count == 11);

    char *json = NULL;
    CHECK(md_tiling_save(tiling, &json) == MD_STATUS_OK);
    MdTiling *copy = NULL;
    CHECK(md_tiling_load((const uint8_t *)json, strlen(json), &copy) == MD_STATUS_OK);
    bool same = false;
    CHECK(md_tiling_same(tiling, copy, &same) == MD_STATUS_OK && same);
    md_string_free(json);

    char *svg = NULL;
    CHECK(md_tiling_svg(copy, MD_SVG_STYLE_COLORED, 400, &svg) == MD_STATUS_OK);
    CHECK(strstr(svg, "<svg ") != NULL);
    md_string_free(svg);

    char *count = NULL;
    CHECK(md_count(MD_COUNT_FAMILY_C, 5, 2, &count) == MD_STATUS_OK);
    CHECK(strcmp(count, "1532") == 0);
    md_string_free(count);

    params.word = "LLL";
    MdTiling *bad = NULL;
    CHECK(md_tiling_build(&params, &bad) == MD_STATUS_INVALID_ARGUMENT);
    CHECK(bad == NULL && md_last_error() != NULL);
    CHECK(md_tiling_save(NULL, &json) == MD_STATUS_NULL_POINTER);

    md_tiling_free(tiling);
    md_tiling_free(copy);
    printf("ok %s\n", md_version());
    return 0;
}
