#include <stdio.h>
#include <stdlib.h>
#include "simplimap.h"

#define CHECK(call)                                                         \
    do {                                                                    \
        SmStatus s_ = (call);                                               \
        if (s_ != SM_STATUS_OK) {                                           \
            const char *e_ = sm_last_error();                               \
            fprintf(stderr, "%s -> %d: %s\n", #call, s_, e_ ? e_ : "");     \
            return 1;                                                       \
        }                                                                   \
    } while (0)

int main(void) {
    SmConstruction *c = NULL;
    CHECK(sm_construct(3, 12, &c));
    size_t v = 0;
    int64_t d = 0;
    bool ok = false;
    CHECK(sm_construction_vertex_count(c, &v));
    CHECK(sm_construction_degree(c, &d));
    CHECK(sm_construction_verified(c, &ok));

    char *json = NULL;
    CHECK(sm_construction_map_json(c, &json));
    SmMap *m = NULL;
    CHECK(sm_map_from_json(json, &m));
    int64_t d2 = 0;
    CHECK(sm_map_degree_homology(m, &d2));
    sm_string_free(json);
    sm_map_free(m);
    sm_construction_free(c);

    if (sm_construct(0, 1, &c) != SM_STATUS_INVALID_INPUT || sm_last_error() == NULL) {
        return 2;
    }
    printf("vertices=%zu degree=%lld homology=%lld verified=%d version=%s\n", v, (long long)d,
           (long long)d2, ok, sm_version());
    return 0;
}
