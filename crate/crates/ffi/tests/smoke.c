#include <stdio.h>
#include <string.h>

#include "hamweight.h"

#define CHECK(cond)                                                       \
  do {                                                                    \
    if (!(cond)) {                                                        \
      const char *msg = hw_last_error_message();                         \
      fprintf(stderr, "%s:%d: %s (%s)\n", __FILE__, __LINE__, #cond,     \
              msg ? msg : "no error");                                    \
      return 1;                                                           \
    }                                                                     \
  } while (0)

int main(void) {
  HwDistribution *primal = NULL, *dual = NULL, *back = NULL;
  CHECK(hw_weights_recursive(2, 3, &primal) == HW_STATUS_OK);
  CHECK(hw_distribution_length(primal) == 7);
  CHECK(hw_distribution_dimension(primal) == 4);

  const uint64_t expected[] = {1, 0, 0, 7, 7, 0, 0, 1};
  for (size_t w = 0; w <= 7; w++) {
    uint64_t c = 0;
    CHECK(hw_distribution_count_u64(primal, w, &c) == HW_STATUS_OK);
    CHECK(c == expected[w]);
  }

  CHECK(hw_dual_distribution(2, 3, 0, &dual) == HW_STATUS_OK);
  CHECK(hw_macwilliams(dual, &back) == HW_STATUS_OK);
  bool same = false;
  CHECK(hw_distribution_equal(primal, back, &same) == HW_STATUS_OK);
  CHECK(same);

  char *s = NULL;
  CHECK(hw_distribution_count(dual, 4, &s) == HW_STATUS_OK);
  CHECK(strcmp(s, "7") == 0);
  hw_string_free(s);

  CHECK(hw_closed_form_count(4, 3, 3, &s) == HW_STATUS_OK);
  CHECK(strcmp(s, "468") == 0);
  hw_string_free(s);

  HwDistribution *bad = NULL;
  CHECK(hw_weights_recursive(3, 2, &bad) == HW_STATUS_GCD_PRECONDITION);
  CHECK(bad == NULL);
  CHECK(hw_last_error_message() != NULL);

  HwTower *t = NULL;
  HwTowerInfo info;
  CHECK(hw_tower_for_code(4, 2, &t) == HW_STATUS_OK);
  CHECK(hw_tower_info(t, &info) == HW_STATUS_OK);
  CHECK(info.q == 4 && info.size == 16 && info.n == 5);
  uint32_t g = 0, inv = 0, one = 0;
  CHECK(hw_tower_gamma_pow(t, 1, &g) == HW_STATUS_OK);
  CHECK(hw_tower_inv(t, g, &inv) == HW_STATUS_OK);
  CHECK(hw_tower_mul(t, g, inv, &one) == HW_STATUS_OK);
  CHECK(one == 1);
  hw_tower_free(t);

  bool passed = false;
  CHECK(hw_verify_json(2, 3, "pless", 0, &s, &passed) == HW_STATUS_OK);
  CHECK(passed);
  CHECK(strstr(s, "pless-power-moment") != NULL);
  hw_string_free(s);

  hw_distribution_free(primal);
  hw_distribution_free(dual);
  hw_distribution_free(back);
  puts("ok");
  return 0;
}
