#include <stdio.h>
#include <string.h>
#include "hopfq.h"

static const char *C2 =
    "loop 2\n"
    "0 1\n"
    "1 0\n";

int main(void) {
    HopfqStructure *h = NULL;
    HopfqReport *r = NULL;
    char *json = NULL;
    if (hopfq_loop_algebra(C2, "Q", &h) != HOPFQ_STATUS_OK) return 10;
    if (hopfq_structure_dim(h) != 2) return 11;
    if (hopfq_verify(h, &r) != HOPFQ_STATUS_OK) return 12;
    if (!hopfq_report_all_pass(r)) return 13;
    if (hopfq_report_json(r, &json) != HOPFQ_STATUS_OK) return 14;
    if (strstr(json, "\"verdict\": \"pass\"") == NULL) return 15;
    hopfq_string_free(json);
    hopfq_report_free(r);
    hopfq_structure_free(h);
    if (hopfq_structure_parse("nonsense\n", &h) != HOPFQ_STATUS_PARSE_ERROR) return 16;
    if (hopfq_last_error() == NULL) return 17;
    puts("ok");
    return 0;
}
