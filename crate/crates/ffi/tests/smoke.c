#include <stdio.h>
#include <string.h>

#include "superq.h"

#define CHECK(call)                                                      \
    do {                                                                 \
        SuperqStatus s_ = (call);                                        \
        if (s_ != SUPERQ_STATUS_OK) {                                    \
            fprintf(stderr, "%s -> %d: %s\n", #call, s_, superq_last_error()); \
            return 1;                                                    \
        }                                                                \
    } while (0)

int main(void) {
    SuperqLabel *x = NULL, *y = NULL;
    SuperqObject *a = NULL, *b = NULL, *d = NULL, *q = NULL;
    CHECK(superq_label_parse("roof@-2:1/block=0", &x));
    CHECK(superq_label_parse("1,1/-1", &y));
    CHECK(superq_object_from_label(x, &a));
    CHECK(superq_object_from_label(y, &b));
    CHECK(superq_object_tensor(a, b, SUPERQ_METHOD_DIRECT, &d));
    CHECK(superq_object_tensor(a, b, SUPERQ_METHOD_QUOTIENT, &q));
    bool eq = false;
    CHECK(superq_object_equal(d, q, &eq));
    int64_t sa = 0, sb = 0, sd = 0;
    CHECK(superq_object_superdimension(a, &sa));
    CHECK(superq_object_superdimension(b, &sb));
    CHECK(superq_object_superdimension(d, &sd));
    char *json = NULL;
    CHECK(superq_object_to_json(d, &json));
    printf("%s\n", json);
    superq_string_free(json);

    SuperqLabel *bad = NULL;
    SuperqStatus s = superq_label_parse("roof@0/block=0", &bad);
    int ok = eq && sd == sa * sb && s == SUPERQ_STATUS_PARSE && bad == NULL &&
             strlen(superq_last_error()) > 0;

    superq_object_free(a);
    superq_object_free(b);
    superq_object_free(d);
    superq_object_free(q);
    superq_label_free(x);
    superq_label_free(y);
    return ok ? 0 : 1;
}
