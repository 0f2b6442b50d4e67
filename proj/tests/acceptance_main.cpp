// placeholder, replaced when the acceptance harness lands
int main() { return 1; }
