// placeholder while the library comes up; replaced by the real driver
int main() { return 0; }
