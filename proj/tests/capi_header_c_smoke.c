#include <sepcomp/sepcomp.h>
#include <string.h>

int main(void) {
  sepcomp_workspace* ws = sepcomp_workspace_new();
  if (!ws) return 1;
  int rc = strlen(sepcomp_version()) == 0;
  sepcomp_workspace_free(ws);
  return rc;
}
