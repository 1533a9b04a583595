#include <stdio.h>
#include <string.h>

#include "topoctl.h"

#define CHECK(cond)                                              \
  do {                                                           \
    if (!(cond)) {                                               \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      return 1;                                                  \
    }                                                            \
  } while (0)

int main(void) {
  TopoSpace *s = NULL;
  uint64_t opens[] = {0, 1, 3};
  CHECK(topo_space_from_opens(2, opens, 3, &s) == TOPO_STATUS_OK);
  CHECK(topo_space_open_count(s) == 3);

  TopoTruth t;
  CHECK(topo_space_property(s, "T0", &t) == TOPO_STATUS_OK && t == TOPO_TRUTH_TRUE);
  CHECK(topo_space_property(s, "T1", &t) == TOPO_STATUS_OK && t == TOPO_TRUTH_FALSE);
  CHECK(topo_space_property(s, "nope", &t) == TOPO_STATUS_UNKNOWN_PROPERTY);
  CHECK(strstr(topo_last_error(), "nope") != NULL);
  topo_space_free(s);

  TopoKb *kb = NULL;
  TopoImplication v;
  char *witness = NULL;
  CHECK(topo_kb_shipped(&kb) == TOPO_STATUS_OK);
  CHECK(topo_kb_status(kb, "US", "UCR", &v, &witness) == TOPO_STATUS_OK);
  CHECK(v == TOPO_IMPLICATION_NOT_IMPLIES && strcmp(witness, "S37") == 0);
  topo_string_free(witness);
  topo_kb_free(kb);

  puts("ok");
  return 0;
}
