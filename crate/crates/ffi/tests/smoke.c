#include <stdio.h>
#include <string.h>
#include "wrtcone.h"

int main(void) {
    WrtReport *report = NULL;
    WrtStatus s = wrt_preset_run("ex2-intersection-failure", 0, &report);
    if (s != WRT_STATUS_FAIL || report == NULL) return 10;
    if (strstr(wrt_report_json(report), "\"witness\"") == NULL) return 11;
    wrt_report_free(report);

    const char *text = "{\"version\": 1, \"objects\": {\"q\": {\"kind\": \"convex\", \"dim\": 2, "
                       "\"ineqs\": [{\"a\": [-1, 0], \"b\": 0}, {\"a\": [0, -1], \"b\": 0}]}}, \"queries\": []}";
    WrtProblem *problem = NULL;
    if (wrt_problem_parse(text, &problem) != WRT_STATUS_OK) return 12;
    const char *origin[2] = {"0", "0"};
    WrtConeUnion *cones = NULL;
    if (wrt_normal_cone(problem, "q", NULL, origin, 2, WRT_CONE_KIND_FRECHET, &cones) != WRT_STATUS_OK) return 13;
    const char *inside[2] = {"-1", "-1/2"};
    const char *outside[2] = {"1", "0"};
    if (wrt_cone_union_contains(cones, inside, 2) != 1) return 14;
    if (wrt_cone_union_contains(cones, outside, 2) != 0) return 15;
    wrt_cone_union_free(cones);
    wrt_problem_free(problem);

    if (wrt_preset_run("no-such-example", 0, &report) != WRT_STATUS_INPUT_ERROR) return 16;
    if (wrt_last_error() == NULL) return 17;
    puts("ok");
    return 0;
}
