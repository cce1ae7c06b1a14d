#include <stdio.h>
#include <string.h>
#include "treetopo.h"

int main(void) {
    size_t edges[] = {1, 2, 2, 3, 3, 4};
    TtTree *t = NULL;
    if (tt_tree_new(4, edges, 1, &t) != TT_STATUS_OK) return 1;
    uint32_t g = 0;
    if (tt_grundy(t, &g) != TT_STATUS_OK || g != 3) return 2;
    tt_tree_free(t);

    size_t bad[] = {1, 2, 2, 1};
    if (tt_tree_new(3, bad, 1, &t) != TT_STATUS_MALFORMED) return 3;
    if (tt_last_error() == NULL) return 4;

    char *count = NULL;
    if (tt_count_labeled_leaves(6, 3, &count) != TT_STATUS_OK) return 5;
    int same = strcmp(count, "720") == 0;
    tt_string_free(count);
    if (!same) return 6;
    printf("ok\n");
    return 0;
}
