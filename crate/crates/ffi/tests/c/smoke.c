#include <stdio.h>
#include <stdlib.h>

#include "stsflow.h"

#define CHECK(cond)                                              \
  do {                                                           \
    if (!(cond)) {                                               \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      return 1;                                                  \
    }                                                            \
  } while (0)

int main(void) {
  StsfSts *base = NULL;
  CHECK(stsf_sts_bose(17, &base) == STSF_STATUS_OK);
  CHECK(stsf_sts_order(base) == 51);

  StsfFlowCert *cert = NULL;
  CHECK(stsf_flow_am_five(base, "zero", &cert) == STSF_STATUS_OK);
  int64_t value = stsf_cert_value(cert);
  CHECK(value >= 2 && value <= 5);

  size_t len = stsf_cert_len(cert);
  CHECK(len == 103 * 102 / 6);
  int64_t *v = malloc(len * sizeof *v);
  CHECK(stsf_cert_entries(cert, v, len) == STSF_STATUS_OK);
  for (size_t i = 0; i < len; i++) CHECK(v[i] != 0 && llabs(v[i]) < value);
  free(v);

  char *json = NULL;
  CHECK(stsf_cert_to_json(cert, &json) == STSF_STATUS_OK);
  StsfFlowCert *again = NULL;
  CHECK(stsf_cert_from_json(json, &again) == STSF_STATUS_OK);
  CHECK(stsf_cert_value(again) == value);
  stsf_string_free(json);
  stsf_cert_free(again);
  stsf_cert_free(cert);

  StsfSts *bad = NULL;
  CHECK(stsf_sts_bose(4, &bad) == STSF_STATUS_INVALID_ARGUMENT);
  CHECK(bad == NULL);
  CHECK(stsf_last_error_message() != NULL);

  uint64_t m = 0;
  CHECK(stsf_johnson_m1_jn3(64, &m) == STSF_STATUS_OK && m == 4);

  stsf_sts_free(base);
  printf("value %lld\n", (long long)value);
  return 0;
}
