MessageDigest digest = MessageDigest.getInstance(hashName);
try {
    digest.update(block);
    publish(digest.digest());
} catch (NoSuchAlgorithmException unsupported) {
    Log.error("hash unsupported " + hashName, unsupported);
    fallBackToDefaultHash();
}
