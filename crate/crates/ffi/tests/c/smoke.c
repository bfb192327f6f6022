#include <stdio.h>
#include <string.h>

#include "lscrystal.h"

#define CHECK(cond)                                              \
    do {                                                         \
        if (!(cond)) {                                           \
            fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
            return 1;                                            \
        }                                                        \
    } while (0)

int main(void) {
    LscConnectedness conn;
    CHECK(lsc_decide_connectedness(4, 3, 3, -2, &conn) == LSC_STATUS_OK);
    CHECK(conn == LSC_CONNECTEDNESS_INFINITELY_MANY_COMPONENTS);

    LscPath *pi = NULL;
    CHECK(lsc_path_pi_lambda(2, 3, 1, -1, &pi) == LSC_STATUS_OK);

    LscPath *up = NULL;
    CHECK(lsc_path_apply(pi, LSC_OP_E, 1, &up) == LSC_STATUS_OK);
    CHECK(up == NULL);
    CHECK(lsc_path_apply(pi, LSC_OP_E, 2, &up) == LSC_STATUS_OK);
    CHECK(up != NULL);

    int64_t c1 = 0, c2 = 0;
    CHECK(lsc_path_weight(up, &c1, &c2) == LSC_STATUS_OK);
    CHECK(c1 == -1 && c2 == 1);

    char *json = NULL;
    CHECK(lsc_path_to_json(up, &json) == LSC_STATUS_OK);
    CHECK(strcmp(json, "{\"cartan\":[2,3],\"lambda\":[1,-1],\"dirs\":[-1],\"sigmas\":[[0,1],[1,1]]}") == 0);
    lsc_string_free(json);

    char *report = NULL;
    CHECK(lsc_explore(pi, 3, 1000, "crystal,reach", 0, &report) == LSC_STATUS_OK);
    CHECK(strstr(report, "\"violation_count\":0") != NULL);
    lsc_string_free(report);

    LscPath *bad = NULL;
    CHECK(lsc_path_from_json("{\"cartan\":[1,1]}", &bad) == LSC_STATUS_BAD_PATH);
    CHECK(bad == NULL);
    CHECK(lsc_last_error() != NULL);

    lsc_path_free(up);
    lsc_path_free(pi);
    puts("ok");
    return 0;
}
